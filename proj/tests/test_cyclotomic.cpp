#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclotomic.hpp"
#include "numbthy.hpp"

using namespace modrep;

TEST_CASE("rationals") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(frac_part(Rat(-7, 3)) == Rat(2, 3));
    CHECK(floor_div(-7, 3) == -3);
}

TEST_CASE("roots of unity reduce to canonical form") {
    // full sum of m-th roots vanishes
    for (i64 m : {4, 6, 12, 21, 168}) {
        Cyc s;
        for (i64 k = 0; k < m; ++k) s += Cyc::root(m, k);
        CHECK(s.is_zero());
    }
    // zeta_2 = -1, zeta_4^2 = -1
    CHECK(Cyc::root(2, 1) == Cyc(-1));
    CHECK(Cyc::root(4, 1) * Cyc::root(4, 1) == Cyc(-1));
    // equality across moduli
    CHECK(Cyc::root(6, 2) == Cyc::root(3, 1));
    CHECK(Cyc::root(12, 6) == Cyc(-1));
}

TEST_CASE("conjugation and products") {
    Cyc z = Cyc::root(7, 3);
    CHECK(z * z.conj() == Cyc(1));
    Cyc sum = z + z.conj();
    CHECK(sum == sum.conj());
    // zeta_5 + zeta_5^4 + zeta_5^2 + zeta_5^3 = -1
    Cyc s = Cyc::root(5, 1) + Cyc::root(5, 2) + Cyc::root(5, 3) + Cyc::root(5, 4);
    CHECK(s == Cyc(-1));
    CHECK(s.is_rational());
    CHECK(s.rational() == Rat(-1));
}

TEST_CASE("gauss sum squares to (-1)^((p-1)/2) p") {
    for (i64 p : {5, 7, 11, 13, 17, 19}) {
        Cyc tau;
        for (i64 t = 1; t < p; ++t) tau += Cyc::root(p, t, Rat(legendre(t, p)));
        i64 eps = (p % 4 == 1) ? 1 : -1;
        CHECK(tau * tau == Cyc(eps * p));
    }
}

TEST_CASE("accumulator matches naive arithmetic") {
    Cyc a = Cyc::root(12, 5) + Cyc::root(12, 2) * Rat(3, 2);
    Cyc b = Cyc::root(12, 7) - Cyc(2);
    CycAccum acc(12);
    acc.add_product(a, b, Rat(5));
    CHECK(acc.finalize() == a * b * Rat(5));
}

TEST_CASE("approximation agrees with exact values") {
    auto v = Cyc::root(8, 1).approx();
    CHECK(v.real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(v.imag() == doctest::Approx(std::sqrt(0.5)));
}
