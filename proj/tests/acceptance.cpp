// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and thresholds are pinned in code.

#include "golden.hpp"
#include "jsonio.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>

using namespace modrep;

namespace {

const std::vector<i64> PRIMES{7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                              59, 61, 67, 71, 73, 79, 83, 89, 97};

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

std::vector<Criterion> results;

template <typename F>
void run(int id, const std::string& name, F&& body) {
    Criterion c{id, name};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail += std::string(" exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(c);
}

void expect(Criterion& c, bool cond, const std::string& what) {
    if (!cond) {
        c.pass = false;
        c.detail += " [" + what + "]";
    }
}

GoldenDiff find_fixture(const std::vector<GoldenDiff>& diffs, const std::string& name) {
    for (auto& d : diffs)
        if (d.fixture == name) return d;
    throw std::runtime_error("fixture report missing: " + name);
}

std::string fixture_dir() { return MODREP_FIXTURE_DIR; }

} // namespace

int main() {
    // 1. character tables for every prime 7..97, both variants
    run(1, "character tables: orthogonality and degrees, p = 7..97", [](Criterion& c) {
        for (i64 p : PRIMES) {
            for (auto variant : {Variant::SL2, Variant::PSL2}) {
                auto t = character_table(build_group(p, variant));
                i64 dimsq = 0;
                for (auto& ir : t.irreps) dimsq += ir.dim * ir.dim;
                expect(c, dimsq == t.order(), "dim^2 sum at p=" + std::to_string(p));
                auto rep = verify_orthogonality(t);
                expect(c, rep.ok, "orthogonality at p=" + std::to_string(p) +
                                      (variant == Variant::SL2 ? " SL" : " PSL"));
            }
        }
        auto t7 = character_table(build_group(7, Variant::SL2));
        std::multiset<i64> dims;
        for (auto& ir : t7.irreps) dims.insert(ir.dim);
        expect(c, dims == std::multiset<i64>{1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8},
               "SL(2,7) degree multiset");
        c.detail = " all primes, both variants, exact" + c.detail;
    });
    expect(results.back(), results.back().seconds < 5.0, "runtime under 5 s");

    // 2. tensor-product grid, cell for cell
    run(2, "tensor grid reproduced cell-for-cell", [](Criterion& c) {
        GoldenOptions opt{fixture_dir(), 4};
        auto diffs = reproduce_appendices(opt);
        auto grid = find_fixture(diffs, "tensor-grid");
        expect(c, grid.cells == 100, "100 cells");
        expect(c, grid.pass, "grid cells match (documented errata only)");
        c.detail = " " + std::to_string(grid.matched) + "/100 verbatim, " +
                   std::to_string(grid.errata) + " documented misprints (" + grid.convention +
                   ")" + c.detail;
        for (auto& m : grid.mismatches)
            if (!m.documented_erratum)
                c.detail += " UNDOCUMENTED " + m.key + " printed=" + m.printed +
                            " computed=" + m.computed;
    });
    expect(results.back(), results.back().seconds < 1.0, "runtime under 1 s");

    // 3. symmetric power tables and generating functions
    run(3, "symmetric power tables and 17 closed-form series to t^40", [](Criterion& c) {
        GoldenOptions opt{fixture_dir(), 40};
        auto diffs = reproduce_appendices(opt);
        auto s3 = find_fixture(diffs, "sym-powers-v3dual");
        auto s4 = find_fixture(diffs, "sym-powers-v4dual");
        expect(c, s3.cells == 10 && s3.matched == 10, "S^n(V3*) rows 2..11 exact");
        expect(c, s4.cells == 5 && s4.matched == 5, "S^n(V4*) rows 2..6 exact");
        auto q = find_fixture(diffs, "gf-q-series");
        auto p = find_fixture(diffs, "gf-p-series");
        expect(c, q.cells == 6 && q.pass, "Q series match or documented");
        expect(c, p.cells == 11 && p.matched == 11, "P series match verbatim");
        c.detail = " sym rows exact; " + std::to_string(q.matched + p.matched) +
                   "/17 series verbatim" + c.detail;
        for (auto& m : q.mismatches) {
            c.detail += std::string("; Q[") + m.key + "] " +
                        (m.documented_erratum ? "documented misprint: " + m.note
                                              : "UNDOCUMENTED printed=" + m.printed);
        }
        for (auto& m : p.mismatches)
            if (!m.documented_erratum)
                c.detail += "; P[" + m.key + "] UNDOCUMENTED printed=" + m.printed;
    });
    expect(results.back(), results.back().seconds < 30.0, "runtime under 30 s");

    // 4. Picard structures
    run(4, "Picard structure: oracle agreement and level data", [](Criterion& c) {
        std::mt19937 rng(20260808);
        std::uniform_int_distribution<int> nd(3, 5), ed(2, 12);
        int done = 0;
        while (done < 200) {
            DyckSignature sig;
            int n = nd(rng);
            for (int i = 0; i < n; ++i) sig.e.push_back(ed(rng));
            if (!sig.hyperbolic()) continue;
            ++done;
            auto ps = picard_structure(sig);
            auto snf = oracle::picard_snf(sig.e);
            expect(c, snf.free_rank == 1 && ps.free_rank == 1, "free rank");
            expect(c, ps.torsion == snf.torsion, "torsion vs Smith oracle");
        }
        for (i64 p : PRIMES) {
            auto ps = picard_structure(DyckSignature{{2, 3, p}});
            auto md = modular_data(p);
            expect(c, ps.canonical_exponent == p - 6, "canonical exponent p-6");
            expect(c, md.deg_lambda == (p * p - 1) / 24, "deg lambda");
        }
        auto m7 = modular_data(7);
        auto e7 = embedding_degrees(7);
        expect(c, m7.genus == 3 && m7.deg_lambda == 2 && e7.first == 4, "level 7 numbers");
        auto m11 = modular_data(11);
        auto e11 = embedding_degrees(11);
        expect(c, m11.genus == 26 && m11.deg_lambda == 5 && e11.first == 20 && e11.second == 25,
               "level 11 numbers");
        c.detail = " 200 random signatures vs Smith oracle; level data exact" + c.detail;
    });

    // 5. rank-2 census
    run(5, "rank-2 census and exponents", [](Criterion& c) {
        for (i64 p : PRIMES) {
            auto cen = su2_census(p);  // CensusMismatch would throw
            expect(c, cen.count == 2 * cen.n, "count 2n at p=" + std::to_string(p));
            for (auto& it : cen.items) {
                bool parity_ok = cen.epsilon == 1 ? it.k % 2 == 1 : it.k % 2 == 0;
                bool range_ok = cen.epsilon == 1 ? (it.k >= cen.n + 1 && it.k <= 5 * cen.n)
                                                 : (it.k >= cen.n && it.k <= 5 * cen.n - 1);
                expect(c, parity_ok && range_ok, "parity/range rule");
            }
            std::set<i64> distinct;
            for (auto& e : cen.exponents) {
                expect(c, e.a < 0 && mod_pos(e.a, 2) == 1 && mod_pos(e.a, 3) == 1,
                       "exponent form at p=" + std::to_string(p));
                distinct.insert(e.a);
            }
            expect(c, i64(distinct.size()) == cen.count, "exponent injectivity");
        }
        expect(c, exponent_of(7, 5).a == -5, "(7,5) -> -5");
        expect(c, exponent_of(7, 3).a == -11, "(7,3) -> -11");
        c.detail = " enumeration = closed form for all p; exponents certified" + c.detail;
    });

    // 6. rank-3 counts and the p = 7 table
    run(6, "rank-3 counts and exponent table", [](Criterion& c) {
        for (i64 p : PRIMES) {
            auto md = modular_data(p);
            expect(c, su3_count(p) == 3 * md.n * md.n + md.epsilon * md.n,
                   "count formula at p=" + std::to_string(p));
        }
        auto tab = su3_exponents_p7();
        expect(c, tab.size() == 4, "four bundles");
        expect(c, tab[0].a == std::array<i64, 3>{-10, 0, 10}, "S2 of (-5,5)");
        expect(c, tab[1].a == std::array<i64, 3>{-22, 0, 22}, "S2 of (-11,11)");
        expect(c, tab[2].a == std::array<i64, 3>{-2, -4, 6}, "first trivial-bundle row");
        expect(c, tab[3].a == std::array<i64, 3>{-6, 4, 2}, "second trivial-bundle row");
        for (auto& row : tab)
            expect(c, row.a[0] + row.a[1] + row.a[2] == 0, "trivial determinant");
        expect(c, tab[0].a[0] == 2 * exponent_of(7, 5).a, "symmetric square consistency k=5");
        expect(c, tab[1].a[0] == 2 * exponent_of(7, 3).a, "symmetric square consistency k=3");
        c.detail = " counts for all p; table exact" + c.detail;
    });

    // 7. unitary solver
    run(7, "unitary solver: census completeness and rank-3 certificates", [](Criterion& c) {
        for (i64 p : {7, 11, 13}) {
            auto cen = su2_census(p);
            std::set<i64> census_k;
            for (auto& it : cen.items) census_k.insert(it.k);
            DyckSignature sig{{2, 3, p}};
            for (auto& it : cen.items) {
                auto spec = census_spec(p, it.k);
                auto rep = solve_triple(spec);
                expect(c, rep.converged && rep.residual < 1e-10,
                       "convergence at (p,k)=(" + std::to_string(p) + "," + std::to_string(it.k) + ")");
                if (!rep.converged) continue;
                auto res = verify_relations(*rep.tuple, sig, census_presentation(p, it.k), -1);
                for (double r : res) expect(c, r < 1e-10, "relation residual");
                auto& A = rep.tuple->a;
                double tr1 = std::abs(A[0].at(0, 0).real() + A[0].at(1, 1).real());
                double tr2 = A[1].at(0, 0).real() + A[1].at(1, 1).real();
                double tr3 = A[2].at(0, 0).real() + A[2].at(1, 1).real();
                expect(c, tr1 < 1e-8, "trace 1");
                expect(c, std::abs(tr2 - cen.epsilon) < 1e-8, "trace 2");
                expect(c, std::abs(tr3 - 2 * std::cos(M_PI * double(it.k) / double(p))) < 1e-8,
                       "trace 3");
                expect(c, irreducibility(*rep.tuple), "irreducibility");
            }
            // same-parity k outside the census range must fail from all starts
            for (i64 k = 1; k < p; ++k) {
                bool want_odd = cen.epsilon == 1;
                if ((k % 2 != 0) != want_odd) continue;
                if (census_k.count(k)) continue;
                expect(c, !su2_admissible(Rat(1, 2), Rat(3 - cen.epsilon, 6),
                                          census_spec(p, k).central_sign == 1
                                              ? Rat(k, p)
                                              : Rat(1) - Rat(k, p)),
                       "admissibility excludes k=" + std::to_string(k));
                auto rep = solve_triple(census_spec(p, k));
                expect(c, !rep.converged && rep.residual > 1e-3,
                       "non-census failure at (p,k)=(" + std::to_string(p) + "," +
                           std::to_string(k) + ")");
            }
        }
        // p = 7, rank 3: four certified irreducible solutions
        auto specs = rank3_specs_p7();
        DyckSignature sig7{{2, 3, 7}};
        auto ext7 = central_extension(sig7);
        for (size_t i = 0; i < specs.size(); ++i) {
            auto rep = solve_triple(specs[i]);
            expect(c, rep.converged && rep.residual < 1e-10,
                   "rank-3 convergence #" + std::to_string(i + 1));
            if (!rep.converged) continue;
            expect(c, irreducibility(*rep.tuple), "rank-3 irreducibility #" + std::to_string(i + 1));
            auto res = verify_relations(*rep.tuple, sig7, ext7, 1);
            for (double r : res) expect(c, r < 1e-9, "rank-3 relations");
        }
        // the two symmetric-square bundles, built exactly from rank-2 solutions
        for (i64 k : {5, 3}) {
            auto rep = solve_triple(census_spec(7, k));
            expect(c, rep.converged, "rank-2 base for sym^2");
            if (!rep.converged) continue;
            UnitaryTuple sq;
            for (int i = 0; i < 3; ++i) sq.a[i] = sym_square(rep.tuple->a[i]);
            auto res = verify_relations(sq, sig7, ext7, 1);
            for (double r : res) expect(c, r < 1e-8, "sym^2 relations");
            expect(c, irreducibility(sq), "sym^2 irreducibility");
        }
        c.detail = " census solves certified; out-of-range classes fail; rank-3 certified" + c.detail;
    });
    expect(results.back(), results.back().seconds < 120.0, "runtime under 2 min");

    // 8. equivariant sections
    run(8, "equivariant section decompositions", [](Criterion& c) {
        GoldenOptions opt{fixture_dir(), 4};
        auto diffs = reproduce_appendices(opt);
        auto h0 = find_fixture(diffs, "h0-lambda");
        expect(c, h0.pass && h0.matched == h0.cells, "published decompositions reproduced");
        for (i64 p : {7, 11, 13, 17, 19, 23, 29, 31}) {
            auto tsl = character_table(build_group(p, Variant::SL2));
            auto tpsl = character_table(build_group(p, Variant::PSL2));
            auto md = modular_data(p);
            for (i64 a = 0; a <= 20; ++a) {
                if (a * md.deg_lambda < 2 * md.genus - 2) continue;
                auto sec = chevalley_weil(a % 2 ? tsl : tpsl, a);
                expect(c, sec.dimension == rr_dimension(p, a),
                       "RR agreement at (p,a)=(" + std::to_string(p) + "," + std::to_string(a) + ")");
            }
        }
        c.detail = " published cases exact (" + h0.convention + "); Riemann-Roch agreement 7..31" + c.detail;
    });

    // 9. polynomial identities
    run(9, "determinant, Pfaffian and Hessian identities", [](Criterion& c) {
        auto reps = run_identity_checks();
        expect(c, reps.size() == 3, "three reports");
        const auto& det = reps[0];
        expect(c, det.support_match, "determinant support and unit coefficients");
        expect(c, !det.sign_pattern.empty(), "determinant sign pattern recorded");
        const auto& pf = reps[1];
        // exact up to the (unstated) Pfaffian orientation: under the pinned
        // anchor the displayed matrix yields exactly the negated cubic
        expect(c, pf.exact_match || (pf.support_match && pf.uniform_sign_flip),
               "Pfaffian identity exact up to orientation");
        const auto& hess = reps[2];
        expect(c, hess.exact_match, "Hessian identity exact up to the scalar 2");
        std::mt19937 rng(31337);
        std::uniform_int_distribution<i64> pick(-9, 9);
        for (int n : {4, 6, 8}) {
            std::vector<std::vector<i64>> m(n, std::vector<i64>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    m[i][j] = pick(rng);
                    m[j][i] = -m[i][j];
                }
            std::vector<std::string> nov;
            PolyMatrix pm;
            pm.n = n;
            pm.entries.assign(n * n, SparsePoly::zero(nov));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) pm.at(i, j) = SparsePoly::constant(nov, m[i][j]);
            SparsePoly p = pfaffian_expand(pm);
            i64 pv = p.is_zero() ? 0 : p.terms.begin()->second;
            expect(c, pv * pv == int_det(m), "Pf^2 = det at n=" + std::to_string(n));
        }
        std::string pfnote = reps[1].exact_match
                                 ? "Pfaffian exact"
                                 : "Pfaffian exact up to one uniform sign (opposite orientation)";
        c.detail = " " + pfnote + "; Hessian exact; determinant sign pattern: " +
                   reps[0].sign_pattern + c.detail;
    });

    // 10. end-to-end reproduction and determinism
    run(10, "end-to-end reproduction and determinism", [](Criterion& c) {
        GoldenOptions opt{fixture_dir(), 40};
        auto diffs = reproduce_appendices(opt);
        for (auto& d : diffs)
            expect(c, d.pass, "fixture " + d.fixture);
        auto again = reproduce_appendices(opt);
        expect(c, golden_json(diffs).dump() == golden_json(again).dump(),
               "byte-identical reports");
        auto spec = census_spec(13, 9);
        auto r1 = solve_json(spec, solve_triple(spec), 13, 9, 2);
        auto r2 = solve_json(spec, solve_triple(spec), 13, 9, 2);
        expect(c, r1.dump() == r2.dump(), "solver determinism");
        c.detail = " all fixtures pass; reports and solver runs byte-identical" + c.detail;
    });

    int failures = 0;
    for (auto& c : results) {
        std::printf("criterion %2d [%s]: %s (%.2fs)%s\n", c.id,
                    c.name.c_str(), c.pass ? "PASS" : "FAIL", c.seconds, c.detail.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
