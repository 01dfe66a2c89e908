#include "chartab.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <map>

namespace modrep {

int CharacterTable::irrep_by_name(const std::string& n) const {
    for (size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].name == n) return int(i);
    throw MError("BadLabel", "no irreducible named " + n);
}

int CharacterTable::class_by_name(const std::string& n) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == n) return int(i);
    throw MError("BadLabel", "no class named " + n);
}

namespace {

// deterministic string form of a row, used by the naming rule
std::string row_string(const std::vector<Cyc>& row) {
    std::string s;
    for (auto& v : row) { s += v.str(); s += '|'; }
    return s;
}

void assign_names(CharacterTable& t) {
    int n = int(t.irreps.size());
    // duals
    for (int i = 0; i < n; ++i) {
        std::vector<Cyc> conj_row;
        conj_row.reserve(t.classes.size());
        for (auto& v : t.values[i]) conj_row.push_back(v.conj());
        for (int j = 0; j < n; ++j) {
            if (t.irreps[j].dim != t.irreps[i].dim) continue;
            if (t.values[j] == conj_row) { t.irreps[i].dual_index = j; break; }
        }
        if (t.irreps[i].dual_index < 0)
            throw std::logic_error("dual irreducible not found");
    }
    // families keyed by (dim, factors_through_psl)
    std::map<std::pair<i64, bool>, std::vector<int>> fam;
    for (int i = 0; i < n; ++i)
        fam[{t.irreps[i].dim, t.irreps[i].factors_through_psl}].push_back(i);

    for (auto& [key, members] : fam) {
        auto [dim, psl] = key;
        std::string base = "V" + std::to_string(dim);
        if (!psl && fam.count({dim, true})) base += "'";
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            return row_string(t.values[a]) < row_string(t.values[b]);
        });
        if (members.size() == 1) {
            t.irreps[members[0]].name = base;
            continue;
        }
        // pair members: with their dual when distinct, otherwise walk in order
        std::vector<int> order(members);
        std::vector<bool> used(n, false);
        int suffix = 0;
        auto letter = [&](int s) { return s == 0 ? std::string() : std::string(1, char('a' + s)); };
        for (int i : order) {
            if (used[i]) continue;
            int partner = t.irreps[i].dual_index;
            if (partner == i || used[partner] ||
                std::find(members.begin(), members.end(), partner) == members.end()) {
                // no usable dual partner; pair consecutively (Galois partners)
                partner = -1;
                for (int j : order)
                    if (j != i && !used[j]) { partner = j; break; }
            }
            if (partner < 0) {
                t.irreps[i].name = base + letter(suffix);
                used[i] = true;
            } else {
                t.irreps[i].name = base + letter(suffix);
                t.irreps[partner].name = base + letter(suffix) + "*";
                t.irreps[i].pair_index = partner;
                t.irreps[partner].pair_index = i;
                used[i] = used[partner] = true;
            }
            ++suffix;
        }
    }
    t.naming_note =
        "dual/partner pairs are ordered by the lexicographic rule on exact row "
        "strings at the fixed class ordering; a global swap of every starred "
        "pair is the only naming freedom";
}

CharacterTable sl_table(const GroupDescriptor& g) {
    i64 p = g.p;
    CharacterTable t;
    t.group = g;
    t.classes = conjugacy_classes(g);
    i64 m = lcm64(2 * p, lcm64(p - 1, p + 1));
    t.field_modulus = m;

    int n_split = int((p - 3) / 2);
    int n_nonsplit = int((p - 1) / 2);
    int C = int(t.classes.size());
    auto rootm = [&](i64 order, i64 k) { return Cyc::root(m, (m / order) * mod_pos(k, order)); };

    // quadratic Gauss sum in Q(zeta_p)
    Cyc tau;
    for (i64 x = 1; x < p; ++x)
        tau += Cyc::root(m, (m / p) * x, Rat(legendre(x, p)));
    int epsp = (p % 4 == 1) ? 1 : -1;  // sign of tau^2 / p

    auto row = [&](std::string series, i64 dim, bool psl) {
        t.irreps.push_back({"", dim, std::move(series), psl, -1, -1});
        t.values.emplace_back(C);
        return &t.values.back();
    };
    const Cyc one(1);

    // class layout: 0 e, 1 z, 2 u+, 3 u-, 4 zu+, 5 zu-, then split a_l, nonsplit b_m
    {
        auto* v = row("trivial", 1, true);
        for (int c = 0; c < C; ++c) (*v)[c] = one;
    }
    {
        auto* v = row("steinberg", p, true);
        (*v)[0] = Cyc(p); (*v)[1] = Cyc(p);
        for (int l = 1; l <= n_split; ++l) (*v)[5 + l] = one;
        for (int mm = 1; mm <= n_nonsplit; ++mm) (*v)[5 + n_split + mm] = Cyc(-1);
    }
    for (int i = 1; i <= n_split; ++i) {
        i64 sgn = (i % 2 == 0) ? 1 : -1;
        auto* v = row("principal", p + 1, sgn == 1);
        (*v)[0] = Cyc(p + 1); (*v)[1] = Cyc(sgn * (p + 1));
        (*v)[2] = (*v)[3] = one;
        (*v)[4] = (*v)[5] = Cyc(sgn);
        for (int l = 1; l <= n_split; ++l)
            (*v)[5 + l] = rootm(p - 1, i64(i) * l) + rootm(p - 1, -i64(i) * l);
    }
    for (int j = 1; j <= n_nonsplit; ++j) {
        i64 sgn = (j % 2 == 0) ? 1 : -1;
        auto* v = row("discrete", p - 1, sgn == 1);
        (*v)[0] = Cyc(p - 1); (*v)[1] = Cyc(sgn * (p - 1));
        (*v)[2] = (*v)[3] = Cyc(-1);
        (*v)[4] = (*v)[5] = Cyc(-sgn);
        for (int mm = 1; mm <= n_nonsplit; ++mm)
            (*v)[5 + n_split + mm] = -(rootm(p + 1, i64(j) * mm) + rootm(p + 1, -i64(j) * mm));
    }
    // the two half-principal representations, dimension (p+1)/2
    for (int which = 0; which < 2; ++which) {
        i64 sgn = epsp;  // central character alpha0(-1)
        auto* v = row("half-principal", (p + 1) / 2, sgn == 1);
        Rat h(1, 2);
        Cyc up = (one + tau) * h, um = (one - tau) * h;
        if (which == 1) std::swap(up, um);
        (*v)[0] = Cyc((p + 1) / 2);
        (*v)[1] = Cyc(sgn * (p + 1) / 2);
        (*v)[2] = up; (*v)[3] = um;
        (*v)[4] = up * Rat(sgn); (*v)[5] = um * Rat(sgn);
        for (int l = 1; l <= n_split; ++l) (*v)[5 + l] = Cyc(l % 2 == 0 ? 1 : -1);
    }
    // the two half-discrete representations, dimension (p-1)/2
    for (int which = 0; which < 2; ++which) {
        i64 sgn = -epsp;
        auto* v = row("half-discrete", (p - 1) / 2, sgn == 1);
        Rat h(1, 2);
        Cyc up = (Cyc(-1) + tau) * h, um = (Cyc(-1) - tau) * h;
        if (which == 1) std::swap(up, um);
        (*v)[0] = Cyc((p - 1) / 2);
        (*v)[1] = Cyc(sgn * (p - 1) / 2);
        (*v)[2] = up; (*v)[3] = um;
        (*v)[4] = up * Rat(sgn); (*v)[5] = um * Rat(sgn);
        for (int mm = 1; mm <= n_nonsplit; ++mm)
            (*v)[5 + n_split + mm] = Cyc(mm % 2 == 0 ? -1 : 1);
    }

    i64 dimsq = 0;
    for (auto& ir : t.irreps) dimsq += ir.dim * ir.dim;
    if (dimsq != g.order) throw std::logic_error("dimension check failed for character table");
    assign_names(t);
    return t;
}

CharacterTable psl_table(const GroupDescriptor& g) {
    GroupDescriptor slg = build_group(g.p, Variant::SL2);
    CharacterTable sl = sl_table(slg);
    CharacterTable t;
    t.group = g;
    t.classes = conjugacy_classes(g);
    t.field_modulus = sl.field_modulus;
    // map each PSL class to an SL class through a lift of its representative
    std::vector<int> slcls;
    auto slclasses = sl.classes;
    for (auto& c : t.classes) {
        GroupElement lift = GroupElement::make(g.p, c.rep.m[0], c.rep.m[1], c.rep.m[2], c.rep.m[3], false);
        slcls.push_back(classify_element(slg, slclasses, lift));
    }
    for (size_t i = 0; i < sl.irreps.size(); ++i) {
        if (!sl.irreps[i].factors_through_psl) continue;
        IrrepLabel lab = sl.irreps[i];
        lab.name.clear();
        lab.dual_index = lab.pair_index = -1;
        t.irreps.push_back(lab);
        std::vector<Cyc> row;
        row.reserve(t.classes.size());
        for (int c : slcls) row.push_back(sl.values[i][c]);
        t.values.push_back(std::move(row));
    }
    i64 dimsq = 0;
    for (auto& ir : t.irreps) dimsq += ir.dim * ir.dim;
    if (dimsq != g.order) throw std::logic_error("dimension check failed for PSL table");
    assign_names(t);
    return t;
}

} // namespace

CharacterTable character_table(const GroupDescriptor& g) {
    if (g.p < 5) throw MError("PrimeTooSmall", "character table needs p >= 5");
    return g.variant == Variant::SL2 ? sl_table(g) : psl_table(g);
}

OrthReport verify_orthogonality(const CharacterTable& t) {
    OrthReport rep;
    int n = int(t.irreps.size());
    int C = int(t.classes.size());
    i64 m = t.field_modulus;
    // conjugate values once
    std::vector<std::vector<Cyc>> conj(n, std::vector<Cyc>(C));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < C; ++c) conj[i][c] = t.values[i][c].conj();

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            CycAccum acc(m);
            for (int c = 0; c < C; ++c)
                acc.add_product(t.values[i][c], conj[j][c], Rat(t.classes[c].size));
            Cyc s = acc.finalize();
            Cyc expect = (i == j) ? Cyc(t.order()) : Cyc();
            ++rep.checked_pairs;
            if (s != expect) {
                rep.ok = false;
                rep.violations.push_back({"row", i, j, (s - expect).str()});
            }
        }
    for (int c = 0; c < C; ++c)
        for (int d = c; d < C; ++d) {
            CycAccum acc(m);
            for (int i = 0; i < n; ++i)
                acc.add_product(t.values[i][c], conj[i][d], Rat(1));
            Cyc s = acc.finalize();
            Cyc expect = (c == d) ? Cyc(Rat(t.order(), t.classes[c].size)) : Cyc();
            ++rep.checked_pairs;
            if (s != expect) {
                rep.ok = false;
                rep.violations.push_back({"column", c, d, (s - expect).str()});
            }
        }
    return rep;
}

i64 schur_constant(i64 p) {
    if (!is_prime(p) || p < 5) throw MError("PrimeTooSmall", "Schur constant defined for prime p >= 5");
    return 2;
}

} // namespace modrep
