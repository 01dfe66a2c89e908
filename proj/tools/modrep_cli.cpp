// modrep command line front end.  Talks to the library exclusively through
// the C API in modrep.h; JSON results go to stdout, and when an output
// directory is configured each run also writes a result file plus a manifest.

#include <modrep.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#ifndef MODREP_FIXTURES_DEFAULT
#define MODREP_FIXTURES_DEFAULT "fixtures"
#endif

namespace {

using njson = nlohmann::ordered_json;

struct RunContext {
    std::string subcommand;
    njson parameters = njson::object();
    unsigned seed = 0;
    std::string out_dir;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

int finish(RunContext& ctx, mr_status rc, char* payload) {
    std::string result = payload ? payload : "";
    if (payload) mr_string_free(payload);
    if (rc != MR_OK) {
        std::cerr << "error: " << mr_status_message(rc) << ": " << mr_last_error() << "\n";
        if (rc == MR_EMISMATCH && !result.empty()) std::cout << result << "\n";
        return rc == MR_EMISMATCH ? 1 : 2;
    }
    std::cout << result << "\n";
    if (!ctx.out_dir.empty()) {
        std::string base = ctx.out_dir + "/" + ctx.subcommand;
        std::string result_path = base + ".json";
        {
            std::ofstream f(result_path);
            f << result << "\n";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - ctx.t0)
                      .count();
        njson manifest;
        manifest["subcommand"] = ctx.subcommand;
        manifest["parameters"] = ctx.parameters;
        manifest["seed"] = ctx.seed;
        manifest["versions"] = {{"modrep", mr_version()}};
        manifest["wall_ms"] = ms;
        manifest["outputs"] = {result_path};
        std::ofstream mf(base + ".manifest.json");
        mf << manifest.dump(2) << "\n";
    }
    return 0;
}

std::vector<long> parse_signature(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modrep: exact invariants of SL(2,p) modular curves"};
    app.require_subcommand(1);

    std::string out_dir;
    if (const char* env = std::getenv("MODREP_OUTPUT_DIR")) out_dir = env;
    app.add_option("--out", out_dir, "directory for result and manifest files");

    // chartab
    long p = 7;
    std::string group = "sl2", format = "json";
    auto* chartab = app.add_subcommand("chartab", "exact character table");
    chartab->add_option("-p", p)->required();
    chartab->add_option("--group", group)->check(CLI::IsMember({"sl2", "psl2"}));
    chartab->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    // tensor
    std::string label_a, label_b;
    long tp = 7;
    std::string tgroup = "sl2";
    auto* tensor = app.add_subcommand("tensor", "tensor product decomposition");
    tensor->add_option("-p", tp)->required();
    tensor->add_option("-a", label_a)->required();
    tensor->add_option("-b", label_b)->required();
    tensor->add_option("--group", tgroup)->check(CLI::IsMember({"sl2", "psl2"}));

    // sympow
    long sp = 7, sn = 2;
    std::string slabel;
    bool exterior = false;
    std::string sgroup = "sl2";
    auto* sympow = app.add_subcommand("sympow", "symmetric/exterior power decomposition");
    sympow->add_option("-p", sp)->required();
    sympow->add_option("-r", slabel, "irrep label")->required();
    sympow->add_option("-n", sn)->required();
    sympow->add_flag("--exterior", exterior);
    sympow->add_option("--group", sgroup)->check(CLI::IsMember({"sl2", "psl2"}));

    // molien
    long mp = 7, mN = 40;
    std::string mtarget, msource;
    std::string mgroup = "sl2";
    auto* mol = app.add_subcommand("molien", "multiplicity generating function");
    mol->add_option("-p", mp)->required();
    mol->add_option("--target", mtarget)->required();
    mol->add_option("--source", msource)->required();
    mol->add_option("-N", mN);
    mol->add_option("--group", mgroup)->check(CLI::IsMember({"sl2", "psl2"}));

    // pic
    std::string sig_str;
    auto* pic = app.add_subcommand("pic", "equivariant Picard structure of a signature");
    pic->add_option("--signature", sig_str)->required();

    // modular
    long modp = 7;
    std::string mod_sections;
    auto* mod = app.add_subcommand("modular", "numerical data of the level-p curve");
    mod->add_option("-p", modp)->required();
    mod->add_option("--sections", mod_sections,
                    "comma-separated exponents a; adds H^0(lambda^a) decompositions");

    // sections
    long secp = 7, seca = 2;
    auto* sec = app.add_subcommand("sections", "equivariant section decomposition of lambda^a");
    sec->add_option("-p", secp)->required();
    sec->add_option("-a", seca)->required();

    // su2-census
    long cp = 7;
    auto* census = app.add_subcommand("su2-census", "rank-2 flat unitary census");
    census->add_option("-p", cp)->required();

    // exponents
    long ep = 7;
    auto* expn = app.add_subcommand("exponents", "exponent sequences for the rank-2 census");
    expn->add_option("-p", ep)->required();

    // su3-count
    long s3p = 7;
    auto* su3 = app.add_subcommand("su3-count", "rank-3 census count (and table at p = 7)");
    su3->add_option("-p", s3p)->required();

    // solve
    long solp = 7, solk = 5;
    int solrank = 2;
    unsigned seed = 0;
    auto* solve = app.add_subcommand("solve", "construct a unitary triple for prescribed classes");
    solve->add_option("-p", solp)->required();
    solve->add_option("-k", solk)->required();
    solve->add_option("-r", solrank)->check(CLI::IsMember({2, 3}));
    solve->add_option("--seed", seed);

    // verify-identities
    auto* ids = app.add_subcommand("verify-identities", "determinant/Pfaffian/Hessian checks");

    // reproduce-appendices
    long rN = 40;
    std::string fixtures = MODREP_FIXTURES_DEFAULT;
    if (const char* env = std::getenv("MODREP_FIXTURES")) fixtures = env;
    auto* rep = app.add_subcommand("reproduce-appendices",
                                   "regenerate and diff every bundled reference table");
    rep->add_option("-N", rN);
    rep->add_option("--fixtures", fixtures);

    CLI11_PARSE(app, argc, argv);

    RunContext ctx;
    ctx.out_dir = out_dir;
    char* payload = nullptr;
    mr_status rc = MR_OK;

    auto table_guard = [&](long pp, const std::string& g, mr_table** t) {
        return mr_table_create(pp, g == "psl2" ? MR_GROUP_PSL2 : MR_GROUP_SL2, t);
    };

    if (chartab->parsed()) {
        ctx.subcommand = "chartab";
        ctx.parameters = {{"p", p}, {"group", group}, {"format", format}};
        mr_table* t = nullptr;
        rc = table_guard(p, group, &t);
        if (rc == MR_OK)
            rc = format == "tsv" ? mr_table_tsv(t, &payload) : mr_table_json(t, &payload);
        mr_table_free(t);
    } else if (tensor->parsed()) {
        ctx.subcommand = "tensor";
        ctx.parameters = {{"p", tp}, {"a", label_a}, {"b", label_b}, {"group", tgroup}};
        mr_table* t = nullptr;
        rc = table_guard(tp, tgroup, &t);
        if (rc == MR_OK) rc = mr_tensor_json(t, label_a.c_str(), label_b.c_str(), &payload);
        mr_table_free(t);
    } else if (sympow->parsed()) {
        ctx.subcommand = "sympow";
        ctx.parameters = {{"p", sp}, {"r", slabel}, {"n", sn}, {"exterior", exterior}};
        mr_table* t = nullptr;
        rc = table_guard(sp, sgroup, &t);
        if (rc == MR_OK) rc = mr_sympow_json(t, slabel.c_str(), sn, exterior ? 1 : 0, &payload);
        mr_table_free(t);
    } else if (mol->parsed()) {
        ctx.subcommand = "molien";
        ctx.parameters = {{"p", mp}, {"target", mtarget}, {"source", msource}, {"N", mN}};
        mr_table* t = nullptr;
        rc = table_guard(mp, mgroup, &t);
        if (rc == MR_OK)
            rc = mr_molien_json(t, mtarget.c_str(), msource.c_str(), mN, &payload);
        mr_table_free(t);
    } else if (pic->parsed()) {
        ctx.subcommand = "pic";
        ctx.parameters = {{"signature", sig_str}};
        auto sig = parse_signature(sig_str);
        rc = mr_picard_json(sig.data(), sig.size(), &payload);
    } else if (mod->parsed()) {
        ctx.subcommand = "modular";
        ctx.parameters = {{"p", modp}, {"sections", mod_sections}};
        auto exps = mod_sections.empty() ? std::vector<long>{} : parse_signature(mod_sections);
        rc = mr_modular_json(modp, exps.empty() ? nullptr : exps.data(), exps.size(), &payload);
    } else if (sec->parsed()) {
        ctx.subcommand = "sections";
        ctx.parameters = {{"p", secp}, {"a", seca}};
        rc = mr_sections_json(secp, seca, &payload);
    } else if (census->parsed()) {
        ctx.subcommand = "su2-census";
        ctx.parameters = {{"p", cp}};
        rc = mr_su2_census_json(cp, &payload);
    } else if (expn->parsed()) {
        ctx.subcommand = "exponents";
        ctx.parameters = {{"p", ep}};
        rc = mr_exponents_json(ep, &payload);
    } else if (su3->parsed()) {
        ctx.subcommand = "su3-count";
        ctx.parameters = {{"p", s3p}};
        rc = mr_su3_json(s3p, &payload);
    } else if (solve->parsed()) {
        ctx.subcommand = "solve";
        ctx.parameters = {{"p", solp}, {"k", solk}, {"r", solrank}, {"seed", seed}};
        ctx.seed = seed;
        rc = mr_solve_json(solp, solk, solrank, seed, &payload);
    } else if (ids->parsed()) {
        ctx.subcommand = "verify-identities";
        rc = mr_verify_identities_json(&payload);
    } else if (rep->parsed()) {
        ctx.subcommand = "reproduce-appendices";
        ctx.parameters = {{"N", rN}, {"fixtures", fixtures}};
        rc = mr_reproduce_json(fixtures.c_str(), rN, &payload);
    }

    return finish(ctx, rc, payload);
}
