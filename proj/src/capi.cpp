#include "../include/modrep.h"

#include "jsonio.hpp"

#include <cstring>

using namespace modrep;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mr_status fail(mr_status code, const std::string& detail) {
    g_last_error = detail;
    return code;
}

template <typename F>
mr_status guarded(char** out_json, F&& fn) {
    if (!out_json) return fail(MR_EUSAGE, "null output pointer");
    *out_json = nullptr;
    try {
        ojson j = fn();
        char* s = dup_string(j.dump(2));
        if (!s) return fail(MR_ENOMEM, "allocation failed");
        *out_json = s;
        g_last_error.clear();
        return MR_OK;
    } catch (const MError& e) {
        mr_status code = MR_EUSAGE;
        if (e.kind == "CensusMismatch" || e.kind == "GoldenMismatch") code = MR_EMISMATCH;
        return fail(code, e.what());
    } catch (const std::exception& e) {
        return fail(MR_EINTERNAL, e.what());
    }
}

} // namespace

struct mr_table {
    CharacterTable t;
};

extern "C" {

const char* mr_version(void) { return "modrep 1.0.0"; }

const char* mr_status_message(mr_status s) {
    switch (s) {
        case MR_OK: return "ok";
        case MR_EUSAGE: return "invalid arguments or domain preconditions";
        case MR_EMISMATCH: return "mathematical mismatch";
        case MR_ENOMEM: return "out of memory";
        default: return "internal error";
    }
}

const char* mr_last_error(void) { return g_last_error.c_str(); }

void mr_string_free(char* s) { std::free(s); }

mr_status mr_table_create(long p, int group_kind, mr_table** out) {
    if (!out) return fail(MR_EUSAGE, "null output pointer");
    *out = nullptr;
    try {
        auto g = build_group(p, group_kind == MR_GROUP_PSL2 ? Variant::PSL2 : Variant::SL2);
        auto t = new mr_table{character_table(g)};
        *out = t;
        g_last_error.clear();
        return MR_OK;
    } catch (const MError& e) {
        return fail(MR_EUSAGE, e.what());
    } catch (const std::exception& e) {
        return fail(MR_EINTERNAL, e.what());
    }
}

void mr_table_free(mr_table* t) { delete t; }

mr_status mr_table_json(const mr_table* t, char** out_json) {
    if (!t) return fail(MR_EUSAGE, "null table");
    return guarded(out_json, [&] { return table_json(t->t); });
}

mr_status mr_table_tsv(const mr_table* t, char** out_tsv) {
    if (!t) return fail(MR_EUSAGE, "null table");
    if (!out_tsv) return fail(MR_EUSAGE, "null output pointer");
    *out_tsv = nullptr;
    try {
        char* s = dup_string(table_tsv(t->t));
        if (!s) return fail(MR_ENOMEM, "allocation failed");
        *out_tsv = s;
        return MR_OK;
    } catch (const std::exception& e) {
        return fail(MR_EINTERNAL, e.what());
    }
}

mr_status mr_table_verify_json(const mr_table* t, char** out_json) {
    if (!t) return fail(MR_EUSAGE, "null table");
    return guarded(out_json, [&] {
        OrthReport r = verify_orthogonality(t->t);
        ojson j;
        j["ok"] = r.ok;
        j["checked_pairs"] = r.checked_pairs;
        j["max_deviation"] = r.ok ? "0" : r.violations.front().value;
        ojson v = ojson::array();
        for (auto& x : r.violations)
            v.push_back({{"kind", x.kind}, {"i", x.i}, {"j", x.j}, {"value", x.value}});
        j["violations"] = v;
        return j;
    });
}

mr_status mr_schur_constant(long p, long* out) {
    if (!out) return fail(MR_EUSAGE, "null output pointer");
    try {
        *out = long(schur_constant(p));
        return MR_OK;
    } catch (const MError& e) {
        return fail(MR_EUSAGE, e.what());
    }
}

mr_status mr_tensor_json(const mr_table* t, const char* a, const char* b, char** out_json) {
    if (!t || !a || !b) return fail(MR_EUSAGE, "null argument");
    return guarded(out_json, [&] {
        int ia = t->t.irrep_by_name(a), ib = t->t.irrep_by_name(b);
        auto d = decompose(cf_mul(ClassFunction::of_irrep(t->t, ia),
                                  ClassFunction::of_irrep(t->t, ib)));
        ojson j;
        j["a"] = a;
        j["b"] = b;
        j["decomposition"] = decomposition_json(d);
        return j;
    });
}

mr_status mr_sympow_json(const mr_table* t, const char* label, long n, int exterior,
                         char** out_json) {
    if (!t || !label) return fail(MR_EUSAGE, "null argument");
    return guarded(out_json, [&] {
        int i = t->t.irrep_by_name(label);
        auto cf = exterior ? ext_power(t->t, i, n) : sym_power(t->t, i, n);
        auto d = decompose(cf);
        ojson j;
        j["irrep"] = label;
        j["n"] = n;
        j["kind"] = exterior ? "exterior" : "symmetric";
        j["dimension"] = d.total_dimension();
        j["decomposition"] = decomposition_json(d);
        return j;
    });
}

mr_status mr_molien_json(const mr_table* t, const char* target, const char* source, long N,
                         char** out_json) {
    if (!t || !target || !source) return fail(MR_EUSAGE, "null argument");
    return guarded(out_json, [&] {
        PowerSeries s = molien(t->t, t->t.irrep_by_name(target), t->t.irrep_by_name(source), N);
        ojson j;
        j["target"] = target;
        j["source"] = source;
        j["N"] = N;
        j["coefficients"] = s.c;
        return j;
    });
}

mr_status mr_picard_json(const long* signature, size_t len, char** out_json) {
    if (!signature || len == 0) return fail(MR_EUSAGE, "empty signature");
    return guarded(out_json, [&] {
        DyckSignature sig;
        for (size_t i = 0; i < len; ++i) sig.e.push_back(signature[i]);
        return picard_json(picard_structure(sig));
    });
}

mr_status mr_modular_json(long p, const long* exponents, size_t n_exponents, char** out_json) {
    return guarded(out_json, [&] {
        ojson j = modular_json(modular_data(p));
        if (exponents && n_exponents) {
            std::map<int, CharacterTable> tables;
            ojson dec = ojson::object();
            for (size_t i = 0; i < n_exponents; ++i) {
                long a = exponents[i];
                int par = int(a % 2);
                if (!tables.count(par))
                    tables.emplace(par, character_table(build_group(
                                            p, par ? Variant::SL2 : Variant::PSL2)));
                auto sec = chevalley_weil(tables.at(par), a);
                ojson labels = ojson::array();
                for (auto& [irr, mult] : sec.decomposition.mult)
                    for (i64 m = 0; m < mult; ++m)
                        labels.push_back(tables.at(par).irreps[irr].name);
                dec[std::to_string(a)] = labels;
            }
            j["decompositions"] = dec;
        }
        return j;
    });
}

mr_status mr_sections_json(long p, long a, char** out_json) {
    return guarded(out_json, [&] {
        auto g = build_group(p, a % 2 ? Variant::SL2 : Variant::PSL2);
        CharacterTable t = character_table(g);
        auto sec = chevalley_weil(t, a);
        ojson j;
        j["p"] = p;
        j["a"] = a;
        j["table"] = a % 2 ? "SL2" : "PSL2";
        j["dimension"] = sec.dimension;
        j["riemann_roch"] = rr_dimension(p, a);
        j["decomposition"] = decomposition_json(sec.decomposition);
        return j;
    });
}

mr_status mr_su2_census_json(long p, char** out_json) {
    return guarded(out_json, [&] { return census_json(su2_census(p)); });
}

mr_status mr_exponents_json(long p, char** out_json) {
    return guarded(out_json, [&] { return exponents_json(i64(p)); });
}

mr_status mr_su3_json(long p, char** out_json) {
    return guarded(out_json, [&] { return su3_json(i64(p)); });
}

mr_status mr_solve_json(long p, long k, int rank, unsigned seed, char** out_json) {
    return guarded(out_json, [&] {
        SolveConfig cfg;
        if (seed) cfg.seed = seed;
        ClassSpec spec;
        if (rank == 2) {
            spec = census_spec(p, k);
        } else if (rank == 3) {
            if (p != 7) throw MError("IndexOutOfRange", "rank-3 solves are provided at p = 7");
            auto specs = rank3_specs_p7();
            if (k < 1 || k > long(specs.size()))
                throw MError("IndexOutOfRange", "rank-3 index must be 1..4");
            spec = specs[k - 1];
        } else {
            throw MError("DimensionMismatch", "rank must be 2 or 3");
        }
        SolveReport rep = solve_triple(spec, cfg);
        return solve_json(spec, rep, p, k, rank);
    });
}

mr_status mr_verify_identities_json(char** out_json) {
    return guarded(out_json, [&] { return identities_json(run_identity_checks()); });
}

mr_status mr_reproduce_json(const char* fixture_dir, long N, char** out_json) {
    if (!fixture_dir) return fail(MR_EUSAGE, "null fixture directory");
    mr_status rc = guarded(out_json, [&] {
        GoldenOptions opt;
        opt.fixture_dir = fixture_dir;
        opt.N = N > 0 ? N : 40;
        return golden_json(reproduce_appendices(opt));
    });
    if (rc != MR_OK) return rc;
    // flag undocumented mismatches as a mathematical failure
    try {
        auto j = nlohmann::json::parse(*out_json);
        for (auto& d : j)
            if (!d["pass"].get<bool>())
                return fail(MR_EMISMATCH, "fixture " + d["fixture"].get<std::string>() +
                                              " has undocumented mismatches");
    } catch (...) {
        return fail(MR_EINTERNAL, "report parse failure");
    }
    return MR_OK;
}

} // extern "C"
