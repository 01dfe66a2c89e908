#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartab.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <set>

using namespace modrep;

TEST_CASE("SL(2,7) degree multiset and labels") {
    auto t = character_table(build_group(7, Variant::SL2));
    std::multiset<i64> dims;
    std::set<std::string> names;
    for (auto& ir : t.irreps) {
        dims.insert(ir.dim);
        names.insert(ir.name);
    }
    CHECK(dims == std::multiset<i64>{1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8});
    CHECK(names == std::set<std::string>{"V1", "V3", "V3*", "V4", "V4*", "V6", "V6'", "V6'*",
                                         "V7", "V8", "V8'"});
    i64 s = 0;
    for (auto& ir : t.irreps) s += ir.dim * ir.dim;
    CHECK(s == 336);
}

TEST_CASE("PSL(2,11) contains irreducibles of dimension 10 and 11") {
    auto t = character_table(build_group(11, Variant::PSL2));
    std::multiset<i64> dims;
    for (auto& ir : t.irreps) dims.insert(ir.dim);
    CHECK(dims.count(10) == 2);
    CHECK(dims.count(11) == 1);
    i64 s = 0;
    for (auto& ir : t.irreps) s += ir.dim * ir.dim;
    CHECK(s == 660);
}

TEST_CASE("orthogonality holds exactly for small primes") {
    for (i64 p : {7, 11, 13}) {
        for (auto variant : {Variant::SL2, Variant::PSL2}) {
            auto t = character_table(build_group(p, variant));
            auto rep = verify_orthogonality(t);
            CHECK(rep.ok);
            CHECK(rep.violations.empty());
        }
    }
}

TEST_CASE("a perturbed table is flagged") {
    auto t = character_table(build_group(7, Variant::SL2));
    t.values[2][3] += Cyc(1);
    auto rep = verify_orthogonality(t);
    CHECK(!rep.ok);
    bool row23 = false;
    for (auto& v : rep.violations)
        if (v.kind == "row" && (v.i == 2 || v.j == 2)) row23 = true;
    CHECK(row23);
}

TEST_CASE("central character and psl flags") {
    for (i64 p : {7, 13}) {
        auto t = character_table(build_group(p, Variant::SL2));
        int zc = -1;
        for (size_t c = 0; c < t.classes.size(); ++c)
            if (t.classes[c].element_order == 2 && t.classes[c].size == 1) zc = int(c);
        REQUIRE(zc >= 0);
        for (size_t i = 0; i < t.irreps.size(); ++i) {
            Cyc v = t.at(int(i), zc);
            if (t.irreps[i].factors_through_psl)
                CHECK(v == Cyc(t.irreps[i].dim));
            else
                CHECK(v == Cyc(-t.irreps[i].dim));
        }
    }
}

TEST_CASE("character at the inverse class is the conjugate") {
    for (i64 p : {7, 11}) {
        for (auto variant : {Variant::SL2, Variant::PSL2}) {
            auto t = character_table(build_group(p, variant));
            for (size_t i = 0; i < t.irreps.size(); ++i)
                for (size_t c = 0; c < t.classes.size(); ++c)
                    CHECK(t.at(int(i), t.classes[c].inverse_class) == t.at(int(i), int(c)).conj());
        }
    }
}

TEST_CASE("regular representation oracle for p <= 13") {
    for (i64 p : {5, 7, 11, 13}) {
        for (auto variant : {Variant::SL2, Variant::PSL2}) {
            auto g = build_group(p, variant);
            auto t = character_table(g);
            // regular character from the brute-force enumeration: |G| at the
            // identity, 0 elsewhere (fixed points of left translation)
            auto brute = conjugacy_classes_bruteforce(g);
            i64 identity_classes = 0;
            for (auto& c : brute)
                if (c.element_order == 1) { ++identity_classes; CHECK(c.size == 1); }
            CHECK(identity_classes == 1);
            // <chi_reg, chi_i> = chi_i(1) * 1 * |G| / |G| = dim
            for (size_t i = 0; i < t.irreps.size(); ++i) {
                Cyc v = t.at(int(i), 0);
                CHECK(v == Cyc(t.irreps[i].dim));
            }
        }
    }
}

TEST_CASE("duals pair up correctly") {
    auto t = character_table(build_group(7, Variant::SL2));
    int v3 = t.irrep_by_name("V3");
    int v3s = t.irrep_by_name("V3*");
    CHECK(t.irreps[v3].dual_index == v3s);
    CHECK(t.irreps[v3s].dual_index == v3);
    int v4 = t.irrep_by_name("V4");
    CHECK(t.irreps[v4].dual_index == t.irrep_by_name("V4*"));
    // the faithful 6-dimensional pair are self-dual Galois partners
    int a = t.irrep_by_name("V6'");
    int b = t.irrep_by_name("V6'*");
    CHECK(t.irreps[a].dual_index == a);
    CHECK(t.irreps[b].dual_index == b);
    CHECK(t.irreps[a].pair_index == b);
}

TEST_CASE("schur constant") {
    CHECK(schur_constant(7) == 2);
    CHECK(schur_constant(11) == 2);
    CHECK(schur_constant(13) == 2);
    CHECK_THROWS_AS(schur_constant(3), MError);
    CHECK_THROWS_AS(schur_constant(8), MError);
}
