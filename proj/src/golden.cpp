#include "golden.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace modrep {

namespace {

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MError("FixtureMissing", path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == '\t') { fields.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        fields.push_back(cur);
        rows.push_back(fields);
    }
    return rows;
}

} // namespace

std::map<std::string, i64> parse_cell(const std::string& s) {
    std::map<std::string, i64> out;
    if (s == "0" || s.empty()) return out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        i64 mult = 1;
        std::string name = part;
        auto star = part.find('*');
        if (star != std::string::npos && part.find_first_not_of("0123456789") >= star) {
            mult = std::stoll(part.substr(0, star));
            name = part.substr(star + 1);
        }
        out[name] += mult;
    }
    return out;
}

std::string cell_string(const std::map<std::string, i64>& cell) {
    if (cell.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [n, m] : cell) {
        if (!first) os << "+";
        if (m != 1) os << m << "*";
        os << n;
        first = false;
    }
    return os.str();
}

std::vector<i64> parse_poly(const std::string& s) {
    std::vector<i64> c;
    size_t i = 0;
    auto bump = [&](size_t deg, i64 v) {
        if (c.size() <= deg) c.resize(deg + 1, 0);
        c[deg] += v;
    };
    while (i < s.size()) {
        i64 sign = 1;
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        i64 coef = 1;
        bool sawnum = false;
        std::string num;
        while (i < s.size() && isdigit(s[i])) num += s[i++];
        if (!num.empty()) { coef = std::stoll(num); sawnum = true; }
        if (i < s.size() && s[i] == '*') ++i;
        i64 deg = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string d;
                while (i < s.size() && isdigit(s[i])) d += s[i++];
                deg = std::stoll(d);
            }
        } else if (!sawnum) {
            throw MError("BadFixture", "cannot parse polynomial: " + s);
        }
        bump(size_t(deg), sign * coef);
    }
    return c;
}

std::vector<i64> parse_factored_poly(const std::string& s) {
    std::vector<i64> acc{1};
    size_t i = 0;
    auto mul = [&](const std::vector<i64>& f) {
        std::vector<i64> r(acc.size() + f.size() - 1, 0);
        for (size_t a = 0; a < acc.size(); ++a)
            for (size_t b = 0; b < f.size(); ++b) r[a + b] = add_checked(r[a + b], mul_checked(acc[a], f[b]));
        acc = r;
    };
    while (i < s.size()) {
        if (s[i] != '(') throw MError("BadFixture", "expected ( in " + s);
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw MError("BadFixture", "unbalanced parens in " + s);
        std::vector<i64> f = parse_poly(s.substr(i + 1, close - i - 1));
        i = close + 1;
        i64 power = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::string d;
            while (i < s.size() && isdigit(s[i])) d += s[i++];
            power = std::stoll(d);
        }
        for (i64 k = 0; k < power; ++k) mul(f);
    }
    return acc;
}

namespace {

// a "convention" assigns to each starred pair family whether its two members
// are swapped relative to the printed labels
struct Convention {
    std::map<std::string, bool> swapped;  // family base name -> swapped?
    std::string str() const {
        if (swapped.empty()) return "as-printed";
        std::string s;
        bool any = false;
        for (auto& [fam, sw] : swapped)
            if (sw) { s += (any ? "," : "") + fam + "<->" + fam + "*"; any = true; }
        return any ? ("swapped: " + s) : "as-printed";
    }
};

struct LabelMap {
    const CharacterTable* t;
    Convention conv;

    // printed label -> irrep index in our table
    int resolve(const std::string& printed) const {
        std::string name = printed;
        std::string base = name;
        bool starred = false;
        if (!base.empty() && base.back() == '*') { base.pop_back(); starred = true; }
        auto it = conv.swapped.find(base);
        if (it != conv.swapped.end() && it->second)
            name = starred ? base : base + "*";
        return t->irrep_by_name(name);
    }
    // our irrep index -> printed-style label
    std::string render(int irrep) const {
        std::string name = t->irreps[irrep].name;
        std::string base = name;
        bool starred = false;
        if (!base.empty() && base.back() == '*') { base.pop_back(); starred = true; }
        auto it = conv.swapped.find(base);
        if (it != conv.swapped.end() && it->second)
            name = starred ? base : base + "*";
        return name;
    }
    std::map<std::string, i64> render_cell(const Decomposition& d) const {
        std::map<std::string, i64> out;
        for (auto& [i, m] : d.mult) out[render(i)] += m;
        return out;
    }
};

std::vector<std::string> starred_families(const CharacterTable& t) {
    std::vector<std::string> fams;
    for (auto& ir : t.irreps) {
        if (ir.pair_index < 0) continue;
        std::string base = ir.name;
        if (!base.empty() && base.back() == '*') continue;
        fams.push_back(base);
    }
    return fams;
}

std::vector<Convention> all_conventions(const CharacterTable& t) {
    auto fams = starred_families(t);
    std::vector<Convention> out;
    for (unsigned mask = 0; mask < (1u << fams.size()); ++mask) {
        Convention c;
        for (size_t i = 0; i < fams.size(); ++i) c.swapped[fams[i]] = (mask >> i) & 1;
        out.push_back(c);
    }
    return out;
}

struct Erratum {
    std::string fixture, key, certificate, corrected;
};

std::vector<Erratum> load_errata(const std::string& dir) {
    std::vector<Erratum> out;
    try {
        for (auto& row : read_tsv(dir + "/errata.tsv")) {
            if (row.size() < 4) continue;
            out.push_back({row[0], row[1], row[2], row[3]});
        }
    } catch (const MError&) {
        // no errata file: nothing documented
    }
    return out;
}

const Erratum* find_erratum(const std::vector<Erratum>& es, const std::string& fixture,
                            const std::string& key) {
    for (auto& e : es)
        if (e.fixture == fixture && e.key == key) return &e;
    return nullptr;
}

// evaluate a candidate convention for the tensor grid and report mismatches
struct GridEval {
    i64 mismatches = 0;
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> diffs;
    // key, printed, computed, rowcol
};

using GridRows = std::vector<std::array<std::string, 3>>;  // row, col, cell

Decomposition tensor_decomp(const CharacterTable& t, int a, int b) {
    return decompose(cf_mul(ClassFunction::of_irrep(t, a), ClassFunction::of_irrep(t, b)));
}

GridEval eval_grid(const CharacterTable& t, const LabelMap& lm, const GridRows& rows) {
    GridEval ev;
    for (auto& [r, c, cell] : rows) {
        auto printed = parse_cell(cell);
        auto computed = lm.render_cell(tensor_decomp(t, lm.resolve(r), lm.resolve(c)));
        if (printed != computed) {
            ++ev.mismatches;
            ev.diffs.push_back({r + "|" + c, cell, cell_string(computed), ""});
        }
    }
    return ev;
}

// "partner-swap" certificate: the printed cell equals the computed value of
// the same cell with one starred pair swapped in the row or column label
// (the misprints all stem from treating the starred partner as a dual)
bool partner_swap_certificate(const CharacterTable& t, const LabelMap& lm,
                              const std::string& r, const std::string& c,
                              const std::string& printed_cell) {
    auto printed = parse_cell(printed_cell);
    for (const std::string& fam : starred_families(t)) {
        auto swap_label = [&](const std::string& l) -> std::string {
            if (l == fam) return fam + "*";
            if (l == fam + "*") return fam;
            return l;
        };
        for (int mode = 1; mode < 4; ++mode) {
            std::string rr = (mode & 1) ? swap_label(r) : r;
            std::string cc = (mode & 2) ? swap_label(c) : c;
            if (rr == r && cc == c) continue;
            auto computed = lm.render_cell(tensor_decomp(t, lm.resolve(rr), lm.resolve(cc)));
            if (computed == printed) return true;
        }
    }
    return false;
}

PowerSeries series_from_fixture(const std::string& num, const std::string& den, i64 N) {
    RationalGF gf{parse_poly(num), parse_factored_poly(den)};
    return expand_rational_gf(gf, N);
}

std::string series_str(const PowerSeries& s, i64 upto) {
    std::ostringstream os;
    os << "[";
    for (i64 i = 0; i <= std::min(upto, s.N()); ++i) {
        if (i) os << ",";
        os << s.c[i];
    }
    os << "]";
    return os.str();
}

} // namespace

std::vector<GoldenDiff> reproduce_appendices(const GoldenOptions& opt) {
    std::vector<GoldenDiff> out;
    auto errata = load_errata(opt.fixture_dir);

    GroupDescriptor sl7 = build_group(7, Variant::SL2);
    CharacterTable t7 = character_table(sl7);

    // ---- symmetric power tables -------------------------------------------
    auto sym_fixture = [&](const std::string& file, const std::string& fixture,
                           const std::string& source_label) {
        GoldenDiff d;
        d.fixture = fixture;
        auto rows = read_tsv(opt.fixture_dir + "/" + file);
        i64 best_mism = -1;
        for (auto& conv : all_conventions(t7)) {
            LabelMap lm{&t7, conv};
            i64 mism = 0;
            std::vector<GoldenCellDiff> diffs;
            for (auto& row : rows) {
                i64 n = std::stoll(row[0]);
                auto printed = parse_cell(row[1]);
                auto dec = decompose(sym_power(t7, lm.resolve(source_label), n));
                auto computed = lm.render_cell(dec);
                if (printed != computed) {
                    ++mism;
                    diffs.push_back({"n=" + std::to_string(n), row[1], cell_string(computed), false, ""});
                }
            }
            if (best_mism < 0 || mism < best_mism) {
                best_mism = mism;
                d.convention = conv.str();
                d.mismatches = diffs;
            }
            if (best_mism == 0) break;
        }
        d.cells = i64(rows.size());
        d.matched = d.cells - best_mism;
        d.pass = best_mism == 0;
        out.push_back(d);
    };
    sym_fixture("sym_v3.tsv", "sym-powers-v3dual", "V3*");
    sym_fixture("sym_v4.tsv", "sym-powers-v4dual", "V4*");

    // ---- tensor grid -------------------------------------------------------
    {
        GoldenDiff d;
        d.fixture = "tensor-grid";
        auto raw = read_tsv(opt.fixture_dir + "/tensor_grid.tsv");
        GridRows rows;
        for (auto& r : raw) rows.push_back({r[0], r[1], r[2]});
        i64 best_m = -1;
        Convention best_conv;
        GridEval best_ev;
        for (auto& conv : all_conventions(t7)) {
            LabelMap lm{&t7, conv};
            GridEval ev = eval_grid(t7, lm, rows);
            if (best_m < 0 || ev.mismatches < best_m) {
                best_m = ev.mismatches;
                best_conv = conv;
                best_ev = ev;
            }
            if (best_m == 0) break;
        }
        d.convention = best_conv.str();
        d.cells = i64(rows.size());
        LabelMap lm{&t7, best_conv};
        for (auto& [key, printed, computed, _] : best_ev.diffs) {
            GoldenCellDiff cd{key, printed, computed, false, ""};
            if (const Erratum* e = find_erratum(errata, "tensor-grid", key)) {
                auto bar = key.find('|');
                std::string r = key.substr(0, bar), c = key.substr(bar + 1);
                bool corrected_ok = parse_cell(e->corrected) == parse_cell(computed);
                bool cert = false;
                std::string why;
                if (e->certificate == "partner-swap") {
                    cert = partner_swap_certificate(t7, lm, r, c, printed);
                    why = "printed cell reproduces a partner-swapped product; "
                          "certificate verified against the computed grid";
                } else if (e->certificate == "dimension") {
                    i64 want = t7.irreps[lm.resolve(r)].dim * t7.irreps[lm.resolve(c)].dim;
                    i64 got = 0;
                    for (auto& [lbl, mult] : parse_cell(printed))
                        got += mult * t7.irreps[lm.resolve(lbl)].dim;
                    cert = got != want;
                    why = "printed cell has total dimension " + std::to_string(got) +
                          " instead of " + std::to_string(want);
                }
                if (cert && corrected_ok) {
                    cd.documented_erratum = true;
                    cd.note = why;
                    ++d.errata;
                }
            }
            d.mismatches.push_back(cd);
        }
        d.matched = d.cells - i64(d.mismatches.size());
        d.pass = std::all_of(d.mismatches.begin(), d.mismatches.end(),
                             [](const GoldenCellDiff& c) { return c.documented_erratum; });
        out.push_back(d);
    }

    // ---- generating functions ---------------------------------------------
    auto gf_fixture = [&](const std::string& file, const std::string& fixture,
                          const std::string& source_label) {
        GoldenDiff d;
        d.fixture = fixture;
        auto rows = read_tsv(opt.fixture_dir + "/" + file);
        i64 best_mism = -1;
        for (auto& conv : all_conventions(t7)) {
            LabelMap lm{&t7, conv};
            i64 mism = 0;
            std::vector<GoldenCellDiff> diffs;
            for (auto& row : rows) {
                const std::string& target = row[0];
                PowerSeries printed = series_from_fixture(row[1], row[2], opt.N);
                PowerSeries computed = molien(t7, lm.resolve(target), lm.resolve(source_label), opt.N);
                if (printed != computed) {
                    ++mism;
                    diffs.push_back({target, series_str(printed, opt.N),
                                     series_str(computed, opt.N), false,
                                     "printed closed form " + row[1] + " / " + row[2]});
                }
            }
            if (best_mism < 0 || mism < best_mism) {
                best_mism = mism;
                d.convention = conv.str();
                d.mismatches = diffs;
            }
            if (best_mism == 0) break;
        }
        d.cells = i64(rows.size());
        // documented errata: a printed closed form with nonzero constant term
        // for a nontrivial target is impossible as a multiplicity series
        for (auto& cd : d.mismatches) {
            const Erratum* e = find_erratum(errata, fixture, cd.key);
            if (!e || e->certificate != "constant-term") continue;
            for (auto& row : read_tsv(opt.fixture_dir + "/" + file)) {
                if (row[0] != cd.key) continue;
                auto printed_num = parse_poly(row[1]);
                bool impossible = cd.key != "V1" && !printed_num.empty() && printed_num[0] != 0;
                PowerSeries corrected = series_from_fixture(e->corrected, row[2], opt.N);
                bool corrected_ok = series_str(corrected, opt.N) == cd.computed;
                if (impossible && corrected_ok) {
                    cd.documented_erratum = true;
                    cd.note = "printed numerator has a nonzero constant term, impossible for a "
                              "nontrivial target; corrected numerator " + e->corrected +
                              " matches the computed series";
                    ++d.errata;
                }
            }
        }
        d.matched = d.cells - i64(d.mismatches.size());
        d.pass = std::all_of(d.mismatches.begin(), d.mismatches.end(),
                             [](const GoldenCellDiff& c) { return c.documented_erratum; });
        out.push_back(d);
    };
    gf_fixture("gf_q.tsv", "gf-q-series", "V3");
    gf_fixture("gf_p.tsv", "gf-p-series", "V4*");

    // ---- section decompositions -------------------------------------------
    {
        GoldenDiff d;
        d.fixture = "h0-lambda";
        auto rows = read_tsv(opt.fixture_dir + "/h0_lambda.tsv");
        // group rows by prime; conventions are chosen per table
        std::map<i64, std::vector<std::pair<i64, std::string>>> byp;
        for (auto& row : rows) byp[std::stoll(row[0])].push_back({std::stoll(row[1]), row[2]});
        for (auto& [p, entries] : byp) {
            std::map<int, CharacterTable> tables;  // parity -> table
            for (auto& [a, cell] : entries) {
                int par = int(a % 2);
                if (!tables.count(par))
                    tables.emplace(par, character_table(build_group(
                                            p, par ? Variant::SL2 : Variant::PSL2)));
            }
            // joint convention per (p, parity)
            for (int par = 0; par < 2; ++par) {
                if (!tables.count(par)) continue;
                const CharacterTable& t = tables.at(par);
                std::vector<std::pair<i64, std::string>> sel;
                for (auto& e : entries)
                    if (int(e.first % 2) == par) sel.push_back(e);
                i64 best_mism = -1;
                std::string conv_str;
                std::vector<GoldenCellDiff> best_diffs;
                for (auto& conv : all_conventions(t)) {
                    LabelMap lm{&t, conv};
                    i64 mism = 0;
                    std::vector<GoldenCellDiff> diffs;
                    for (auto& [a, cell] : sel) {
                        auto printed = parse_cell(cell);
                        auto sec = chevalley_weil(t, a);
                        auto computed = lm.render_cell(sec.decomposition);
                        if (printed != computed) {
                            ++mism;
                            diffs.push_back({"p=" + std::to_string(p) + ",a=" + std::to_string(a),
                                             cell, cell_string(computed), false, ""});
                        }
                    }
                    if (best_mism < 0 || mism < best_mism) {
                        best_mism = mism;
                        conv_str = conv.str();
                        best_diffs = diffs;
                    }
                    if (best_mism == 0) break;
                }
                d.cells += i64(sel.size());
                d.matched += i64(sel.size()) - best_mism;
                for (auto& cd : best_diffs) d.mismatches.push_back(cd);
                if (!d.convention.empty()) d.convention += "; ";
                d.convention += "p=" + std::to_string(p) + (par ? " odd: " : " even: ") + conv_str;
            }
        }
        d.pass = d.mismatches.empty();
        out.push_back(d);
    }
    return out;
}

} // namespace modrep
