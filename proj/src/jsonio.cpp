#include "jsonio.hpp"

#include <sstream>

namespace modrep {

ojson cyc_json(const Cyc& v) {
    ojson j;
    j["conductor"] = v.modulus();
    ojson terms = ojson::array();
    for (auto& [k, c] : v.terms()) terms.push_back({k, c.str()});
    j["coeffs"] = terms;
    auto ap = v.approx();
    j["approx"] = {ap.real(), ap.imag()};
    return j;
}

static ojson element_json(const GroupElement& e) {
    return ojson::array({e.m[0], e.m[1], e.m[2], e.m[3]});
}

ojson table_json(const CharacterTable& t) {
    ojson j;
    j["p"] = t.group.p;
    j["group"] = t.group.variant == Variant::SL2 ? "SL2" : "PSL2";
    j["order"] = t.group.order;
    j["field_conductor"] = t.field_modulus;
    j["naming_note"] = t.naming_note;
    ojson classes = ojson::array();
    for (auto& c : t.classes) {
        ojson cj;
        cj["name"] = c.name;
        cj["size"] = c.size;
        cj["element_order"] = c.element_order;
        cj["representative"] = element_json(c.rep);
        cj["inverse_class"] = c.inverse_class;
        classes.push_back(cj);
    }
    j["classes"] = classes;
    ojson irreps = ojson::array();
    for (auto& ir : t.irreps) {
        ojson ij;
        ij["name"] = ir.name;
        ij["dim"] = ir.dim;
        ij["series"] = ir.series;
        ij["factors_through_psl"] = ir.factors_through_psl;
        ij["dual"] = t.irreps[ir.dual_index].name;
        irreps.push_back(ij);
    }
    j["irreps"] = irreps;
    ojson vals = ojson::array();
    for (auto& row : t.values) {
        ojson r = ojson::array();
        for (auto& v : row) r.push_back(cyc_json(v));
        vals.push_back(r);
    }
    j["values"] = vals;
    return j;
}

std::string table_tsv(const CharacterTable& t) {
    std::ostringstream os;
    os << "irrep";
    for (auto& c : t.classes) os << "\t" << c.name;
    os << "\n";
    os.precision(12);
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        os << t.irreps[i].name;
        for (auto& v : t.values[i]) {
            auto ap = v.approx();
            os << "\t" << ap.real();
            if (ap.imag() > 1e-9 || ap.imag() < -1e-9) {
                os << (ap.imag() >= 0 ? "+" : "") << ap.imag() << "i";
            }
        }
        os << "\n";
    }
    return os.str();
}

ojson decomposition_json(const Decomposition& d) {
    ojson j = ojson::object();
    for (auto& [i, m] : d.mult) j[d.table->irreps[i].name] = m;
    return j;
}

ojson picard_json(const PicardStructure& ps) {
    ojson j;
    j["signature"] = ps.sig.e;
    j["free_rank"] = ps.free_rank;
    j["torsion"] = ps.torsion;
    j["N"] = ps.N;
    j["canonical_exponent"] = ps.canonical_exponent;
    j["d_ladder"] = ps.d_ladder;
    return j;
}

ojson modular_json(const ModularData& md) {
    ojson j;
    j["p"] = md.p;
    j["epsilon"] = md.epsilon;
    j["n"] = md.n;
    j["genus"] = md.genus;
    j["deg_lambda"] = md.deg_lambda;
    j["group_order"] = md.group_order;
    j["deg_canonical"] = md.deg_canonical;
    j["canonical_is_lambda_power"] = md.canonical_is_lambda_power;
    j["linearizable_index"] = md.linearizable_index;
    j["schur_d"] = md.schur_d;
    j["degenerate"] = md.degenerate;
    j["invariant_class_degree"] = md.invariant_class_degree;
    j["orbit_combination_degree"] = md.orbit_combination_degree;
    j["orbit_degree_note"] =
        "the stated generator degree and the orbit combination degree disagree; "
        "both are reported verbatim";
    return j;
}

ojson census_json(const ModuliCensus& c) {
    ojson j;
    j["p"] = c.p;
    j["n"] = c.n;
    j["epsilon"] = c.epsilon;
    j["rank"] = c.rank;
    j["count"] = c.count;
    ojson items = ojson::array();
    for (size_t i = 0; i < c.items.size(); ++i) {
        const auto& it = c.items[i];
        ojson ij;
        ij["k"] = it.k;
        ij["trace_third"] = it.trace_third();
        ij["exponent_a"] = c.exponents[i].a;
        ij["central_sign"] = it.central_sign;
        ojson angles = ojson::array();
        for (auto& a : it.angles) angles.push_back(a.str());
        ij["angles"] = angles;
        ij["rotation_number"] = it.ell3;
        ij["product_sign"] = it.product_sign;
        items.push_back(ij);
    }
    j["items"] = items;
    return j;
}

ojson exponents_json(i64 p) {
    ModuliCensus c = su2_census(p);
    CentralExtensionData ext = central_extension(DyckSignature{{2, 3, p}});
    auto iso = lambda_isotropy(p);
    ojson j;
    j["p"] = p;
    j["s"] = ext.s;
    j["b_i"] = ext.b_i;
    j["b"] = ext.b;
    j["lambda_isotropy"] = {iso[0], iso[1], iso[2]};
    ojson items = ojson::array();
    for (auto& e : c.exponents) {
        ojson ij;
        ij["k"] = e.k;
        ij["a"] = e.a;
        static const char* branch_names[] = {"a*n = eps*k", "a*n = eps*(2p-k)",
                                             "a*n = eps*(p-k)", "a*n = eps*(p+k)"};
        ij["branch"] = branch_names[e.congruence_branch];
        items.push_back(ij);
    }
    j["exponents"] = items;
    return j;
}

ojson su3_json(i64 p) {
    ojson j;
    j["p"] = p;
    j["rank"] = 3;
    j["count"] = su3_count(p);
    if (p == 7) {
        ojson items = ojson::array();
        for (auto& r : su3_exponents_p7()) {
            ojson ij;
            ij["bundle"] = r.bundle;
            ij["exponents"] = {r.a[0], r.a[1], r.a[2]};
            items.push_back(ij);
        }
        j["exponent_table"] = items;
    }
    return j;
}

static ojson cmat_json(const CMat& m) {
    ojson rows = ojson::array();
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < m.n; ++i) {
        ojson row = ojson::array();
        for (int jx = 0; jx < m.n; ++jx)
            row.push_back({m.at(i, jx).real(), m.at(i, jx).imag()});
        rows.push_back(row);
    }
    return rows;
}

ojson solve_json(const ClassSpec& spec, const SolveReport& rep, i64 p, i64 k, int rank) {
    ojson j;
    j["p"] = p;
    j["k"] = k;
    j["rank"] = rank;
    j["seed"] = rep.seed;
    j["central_sign"] = spec.central_sign;
    ojson angs = ojson::array();
    for (auto& gen : spec.angles) {
        ojson g = ojson::array();
        for (auto& a : gen) g.push_back(a.str());
        angs.push_back(g);
    }
    j["eigenangles"] = angs;
    j["converged"] = rep.converged;
    j["residual"] = rep.residual;
    j["starts_used"] = rep.starts_used;
    j["iterations"] = rep.iterations;
    if (rep.tuple) {
        ojson mats = ojson::array();
        for (auto& m : rep.tuple->a) mats.push_back(cmat_json(m));
        j["matrices"] = mats;
        j["irreducible"] = irreducibility(*rep.tuple);
        DyckSignature sig{{2, 3, p}};
        if (rank == 2) {
            auto ext = census_presentation(p, k);
            j["relation_residuals"] = verify_relations(*rep.tuple, sig, ext, -1);
            j["presentation"] = {{"s", ext.s}, {"b_i", ext.b_i}, {"b", ext.b}};
        } else {
            auto ext = central_extension(sig);
            j["relation_residuals"] = verify_relations(*rep.tuple, sig, ext, 1);
            j["presentation"] = {{"s", ext.s}, {"b_i", ext.b_i}, {"b", ext.b}};
        }
    }
    return j;
}

ojson identities_json(const std::vector<IdentityReport>& reps) {
    ojson j = ojson::array();
    for (auto& r : reps) {
        ojson rj;
        rj["name"] = r.name;
        rj["claimed"] = r.claimed;
        rj["computed"] = r.computed;
        rj["exact_match"] = r.exact_match;
        rj["support_and_unit_coefficients"] = r.support_match;
        rj["match_up_to_sign"] = r.match_up_to_sign;
        rj["uniform_sign_flip"] = r.uniform_sign_flip;
        rj["difference"] = r.difference;
        rj["sign_pattern"] = r.sign_pattern;
        rj["specializations_checked"] = r.specializations_checked;
        j.push_back(rj);
    }
    return j;
}

ojson golden_json(const std::vector<GoldenDiff>& diffs) {
    ojson j = ojson::array();
    for (auto& d : diffs) {
        ojson dj;
        dj["fixture"] = d.fixture;
        dj["convention"] = d.convention;
        dj["cells"] = d.cells;
        dj["matched"] = d.matched;
        dj["documented_errata"] = d.errata;
        dj["pass"] = d.pass;
        ojson ms = ojson::array();
        for (auto& m : d.mismatches) {
            ojson mj;
            mj["key"] = m.key;
            mj["printed"] = m.printed;
            mj["computed"] = m.computed;
            mj["documented_erratum"] = m.documented_erratum;
            mj["note"] = m.note;
            ms.push_back(mj);
        }
        dj["mismatches"] = ms;
        j.push_back(dj);
    }
    return j;
}

ojson series_json(const PowerSeries& s) {
    ojson j;
    j["coefficients"] = s.c;
    return j;
}

} // namespace modrep
