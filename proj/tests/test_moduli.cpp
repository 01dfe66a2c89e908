#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moduli.hpp"
#include "numbthy.hpp"

#include <set>

using namespace modrep;

namespace {
const std::vector<i64> PRIMES{7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                              59, 61, 67, 71, 73, 79, 83, 89, 97};
}

TEST_CASE("central extension constants") {
    auto d7 = central_extension(DyckSignature{{2, 3, 7}});
    CHECK(d7.s == 1);
    CHECK(d7.b_i == std::vector<i64>{1, 1, 1});
    CHECK(d7.b == 1);

    auto d11 = central_extension(DyckSignature{{2, 3, 11}});
    CHECK(d11.s == 5);
    CHECK(d11.b_i == std::vector<i64>{1, 2, 9});
    CHECK(d11.b == 2);

    for (i64 p : PRIMES) {
        auto d = central_extension(DyckSignature{{2, 3, p}});
        CHECK(d.s == p - 6);
        for (int i = 0; i < 3; ++i)
            CHECK(mod_pos(d.s * d.b_i[i], DyckSignature{{2, 3, p}}.e[i]) == 1);
    }
    CHECK_THROWS_AS(central_extension(DyckSignature{{2, 3, 9}}), MError);  // not coprime
}

TEST_CASE("su2 admissibility") {
    CHECK(su2_admissible(Rat(1, 2), Rat(1, 3), Rat(3, 7)));
    CHECK(!su2_admissible(Rat(1, 2), Rat(1, 3), Rat(1, 42)));
    // boundary of the strict inequality: theta3 = min(theta1+theta2, 2pi-...)
    CHECK(!su2_admissible(Rat(1, 2), Rat(1, 3), Rat(5, 6)));
    CHECK(!su2_admissible(Rat(1, 2), Rat(1, 3), Rat(1, 6)));
    // the upper bound for (pi/2, pi/2) is pi itself, so anything interior works
    CHECK(su2_admissible(Rat(1, 2), Rat(1, 2), Rat(999999999, 1000000000)));
    CHECK_THROWS_AS(su2_admissible(Rat(1, 2), Rat(1, 3), Rat(1)), MError);
    CHECK_THROWS_AS(su2_admissible(Rat(0), Rat(1, 3), Rat(1, 2)), MError);
}

TEST_CASE("su2 census at small primes") {
    auto c7 = su2_census(7);
    CHECK(c7.count == 2);
    std::vector<i64> ks;
    for (auto& it : c7.items) ks.push_back(it.k);
    CHECK(ks == std::vector<i64>{3, 5});

    auto c11 = su2_census(11);
    CHECK(c11.count == 4);
    ks.clear();
    for (auto& it : c11.items) ks.push_back(it.k);
    CHECK(ks == std::vector<i64>{2, 4, 6, 8});

    auto c13 = su2_census(13);
    ks.clear();
    for (auto& it : c13.items) ks.push_back(it.k);
    CHECK(ks == std::vector<i64>{3, 5, 7, 9});
}

TEST_CASE("census size and rule across the prime range") {
    for (i64 p : PRIMES) {
        auto c = su2_census(p);
        CHECK(c.count == 2 * c.n);
        for (auto& it : c.items) {
            if (c.epsilon == 1) {
                CHECK(it.k % 2 == 1);
                CHECK(it.k >= c.n + 1);
                CHECK(it.k <= 5 * c.n);
            } else {
                CHECK(it.k % 2 == 0);
                CHECK(it.k >= c.n);
                CHECK(it.k <= 5 * c.n - 1);
            }
            CHECK(it.central_sign == -1);
            // the enumerated rotation number matches k up to the k <-> p-k flip
            CHECK((it.ell3 == it.k || it.ell3 == p - it.k));
        }
    }
}

TEST_CASE("exponents of the rank-2 bundles") {
    CHECK(exponent_of(7, 5).a == -5);
    CHECK(exponent_of(7, 3).a == -11);
    // independent exhaustive check of minimality for (11, 2)
    auto e = exponent_of(11, 2);
    for (i64 a = -1; a > e.a; a -= 2) {
        if (mod_pos(a, 3) != 1) continue;
        i64 an = mod_pos(a * 2, 22);
        bool hits = an == mod_pos(-2, 22) || an == mod_pos(-(22 - 2), 22);
        CHECK(!hits);
    }
    CHECK(e.a == -23);

    for (i64 p : PRIMES) {
        auto c = su2_census(p);
        std::set<i64> seen;
        for (auto& ex : c.exponents) {
            CHECK(ex.a < 0);
            CHECK(mod_pos(ex.a, 2) == 1);
            CHECK(mod_pos(ex.a, 3) == 1);
            // (a, -a) sums to an even number
            CHECK((ex.a + (-ex.a)) % 2 == 0);
            seen.insert(ex.a);
        }
        // distinct bundles get distinct exponents
        CHECK(i64(seen.size()) == c.count);
    }
}

TEST_CASE("invalid census keys are rejected") {
    CHECK_THROWS_AS(exponent_of(7, 0), MError);
    CHECK_THROWS_AS(exponent_of(7, 7), MError);
    // a wrong-parity k aliases its gauge partner p - k
    CHECK(exponent_of(7, 2).a == exponent_of(7, 5).a);
}

TEST_CASE("lambda isotropy exponents") {
    auto s7 = lambda_isotropy(7);
    CHECK(s7 == std::array<i64, 3>{1, 1, 1});
    auto s11 = lambda_isotropy(11);
    CHECK(s11 == std::array<i64, 3>{1, 2, 9});
    auto s13 = lambda_isotropy(13);
    CHECK(s13 == std::array<i64, 3>{1, 1, 2});
    std::array<i64, 3> e{2, 3, 0};
    for (i64 p : PRIMES) {
        e[2] = p;
        auto s = lambda_isotropy(p);
        for (int i = 0; i < 3; ++i) CHECK(mod_pos((p - 6) * s[i], e[i]) == 1);
    }
}

TEST_CASE("rank-3 counts and the p = 7 table") {
    CHECK(su3_count(7) == 4);
    CHECK(su3_count(11) == 10);
    CHECK(su3_count(13) == 14);
    for (i64 p : PRIMES) {
        auto md = modular_data(p);
        CHECK(su3_count(p) == 3 * md.n * md.n + md.epsilon * md.n);
    }
    auto tab = su3_exponents_p7();
    REQUIRE(tab.size() == 4);
    CHECK(tab[0].a == std::array<i64, 3>{-10, 0, 10});
    CHECK(tab[1].a == std::array<i64, 3>{-22, 0, 22});
    CHECK(tab[2].a == std::array<i64, 3>{-2, -4, 6});
    CHECK(tab[3].a == std::array<i64, 3>{-6, 4, 2});
    for (auto& row : tab) CHECK(row.a[0] + row.a[1] + row.a[2] == 0);
    // symmetric squares double the rank-2 exponents
    CHECK(tab[0].a == std::array<i64, 3>{2 * -5, 0, -2 * -5});
    CHECK(tab[1].a == std::array<i64, 3>{2 * -11, 0, -2 * -11});
}
