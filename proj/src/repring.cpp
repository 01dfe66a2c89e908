#include "repring.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <sstream>

namespace modrep {

ClassFunction ClassFunction::of_irrep(const CharacterTable& t, int irrep) {
    if (irrep < 0 || irrep >= int(t.irreps.size()))
        throw MError("IndexOutOfRange", "irrep index");
    return {&t, t.values[irrep]};
}

static void check_same(const ClassFunction& f, const ClassFunction& g) {
    if (f.table != g.table)
        throw MError("TableMismatch", "class functions live on different tables");
}

ClassFunction cf_add(const ClassFunction& f, const ClassFunction& g) {
    check_same(f, g);
    ClassFunction r{f.table, f.values};
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] += g.values[i];
    return r;
}

ClassFunction cf_mul(const ClassFunction& f, const ClassFunction& g) {
    check_same(f, g);
    ClassFunction r{f.table, f.values};
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] *= g.values[i];
    return r;
}

ClassFunction cf_conj(const ClassFunction& f) {
    ClassFunction r{f.table, f.values};
    for (auto& v : r.values) v = v.conj();
    return r;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    check_same(f, g);
    const CharacterTable& t = *f.table;
    CycAccum acc(t.field_modulus);
    for (size_t c = 0; c < t.classes.size(); ++c)
        acc.add_product(f.values[c], g.values[c].conj(), Rat(t.classes[c].size));
    Cyc s = acc.finalize();
    return s.rational() * Rat(1, t.order());
}

i64 Decomposition::total_dimension() const {
    i64 d = 0;
    for (auto& [i, m] : mult) d += m * table->irreps[i].dim;
    return d;
}

std::string Decomposition::str() const {
    if (mult.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, m] : mult) {
        if (!first) os << " + ";
        if (m != 1) os << m << "*";
        os << table->irreps[i].name;
        first = false;
    }
    return os.str();
}

std::map<std::string, i64> Decomposition::by_name() const {
    std::map<std::string, i64> r;
    for (auto& [i, m] : mult) r[table->irreps[i].name] = m;
    return r;
}

Decomposition decompose(const ClassFunction& f) {
    const CharacterTable& t = *f.table;
    Decomposition d;
    d.table = &t;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        Rat m = inner_product(f, ClassFunction::of_irrep(t, int(i)));
        if (m.is_zero()) continue;
        if (!m.is_integer() || m.num < 0)
            throw MError("NotACharacter",
                         "multiplicity of " + t.irreps[i].name + " is " + m.str());
        d.mult[int(i)] = m.num;
    }
    return d;
}

namespace {

// chi(c^k) for every class as a function of k is what both Newton recursions
// consume; build sym/ext power values pointwise per class
ClassFunction newton_power(const CharacterTable& t, int irrep, i64 n, bool symmetric) {
    if (n < 0) throw MError("IndexOutOfRange", "power must be nonnegative");
    ClassFunction out{&t, std::vector<Cyc>(t.classes.size())};
    for (size_t c = 0; c < t.classes.size(); ++c) {
        std::vector<Cyc> p(n + 1), h(n + 1);
        for (i64 k = 1; k <= n; ++k)
            p[k] = t.values[irrep][power_class(t.classes, int(c), k)];
        h[0] = Cyc(1);
        for (i64 k = 1; k <= n; ++k) {
            Cyc s;
            for (i64 j = 1; j <= k; ++j) {
                Cyc term = p[j] * h[k - j];
                if (!symmetric && j % 2 == 0) term = -term;
                s += term;
            }
            h[k] = s * Rat(1, k);
        }
        out.values[c] = h[n];
    }
    return out;
}

} // namespace

ClassFunction sym_power(const CharacterTable& t, int irrep, i64 n) {
    return newton_power(t, irrep, n, true);
}

ClassFunction ext_power(const CharacterTable& t, int irrep, i64 n) {
    return newton_power(t, irrep, n, false);
}

std::vector<i64> eigenvalue_multiset(const CharacterTable& t, int irrep, int cls) {
    const auto& c = t.classes.at(cls);
    i64 ord = c.element_order;
    i64 M = lcm64(t.field_modulus, ord);
    std::vector<i64> mults(ord);
    i64 total = 0;
    for (i64 r = 0; r < ord; ++r) {
        CycAccum acc(M);
        for (i64 j = 0; j < ord; ++j) {
            const Cyc& v = t.values[irrep][c.power_to_class[j]];
            acc.add_product(v, Cyc::root(M, (M / ord) * mod_pos(-r * j, ord)), Rat(1));
        }
        Cyc s = acc.finalize();
        Rat m = s.rational() * Rat(1, ord);
        if (!m.is_integer() || m.num < 0)
            throw MError("NonIntegralMultiplicity",
                         "eigenvalue multiplicity " + m.str() + " for " +
                             t.irreps[irrep].name + " at class " + c.name);
        mults[r] = m.num;
        total += m.num;
    }
    if (total != t.irreps[irrep].dim)
        throw MError("NonIntegralMultiplicity", "eigenvalue multiplicities do not sum to dim");
    return mults;
}

PowerSeries expand_rational_gf(const RationalGF& f, i64 N) {
    if (f.den.empty() || (f.den[0] != 1 && f.den[0] != -1))
        throw MError("NotExpandable", "denominator constant term must be +-1");
    std::vector<i64> inv(N + 1, 0);
    // invert denominator: den * inv = 1
    inv[0] = f.den[0];  // 1/(+-1) = +-1
    for (i64 n = 1; n <= N; ++n) {
        i128 s = 0;
        for (size_t k = 1; k < f.den.size() && i64(k) <= n; ++k)
            s += i128(f.den[k]) * inv[n - k];
        inv[n] = narrow128(-s * f.den[0]);
    }
    PowerSeries out;
    out.c.assign(N + 1, 0);
    for (i64 n = 0; n <= N; ++n) {
        i128 s = 0;
        for (size_t k = 0; k < f.num.size() && i64(k) <= n; ++k)
            s += i128(f.num[k]) * inv[n - k];
        out.c[n] = narrow128(s);
    }
    return out;
}

PowerSeries molien(const CharacterTable& t, int target, int source, i64 N) {
    if (N < 0) throw MError("IndexOutOfRange", "N must be nonnegative");
    i64 M = t.field_modulus;
    for (auto& c : t.classes) M = lcm64(M, c.element_order);

    // route 1: average conj(chi_V) / det(1 - t rho_W(c)) over classes
    std::vector<Cyc> acc(N + 1);
    for (size_t ci = 0; ci < t.classes.size(); ++ci) {
        const auto& cl = t.classes[ci];
        i64 ord = cl.element_order;
        auto mults = eigenvalue_multiset(t, source, int(ci));
        // det(1 - t rho) as a polynomial, degree = dim
        std::vector<Cyc> det{Cyc(1)};
        for (i64 r = 0; r < ord; ++r) {
            for (i64 rep = 0; rep < mults[r]; ++rep) {
                std::vector<Cyc> next(std::min<i64>(i64(det.size()) + 1, N + 1 + 1));
                Cyc zr = Cyc::root(M, (M / ord) * r);
                for (size_t k = 0; k < det.size(); ++k) {
                    if (k < next.size()) next[k] += det[k];
                    if (k + 1 < next.size()) next[k + 1] -= det[k] * zr;
                }
                det = std::move(next);
            }
        }
        // series inverse of det (constant term 1)
        std::vector<Cyc> inv(N + 1);
        inv[0] = Cyc(1);
        for (i64 n = 1; n <= N; ++n) {
            Cyc s;
            for (size_t k = 1; k < det.size() && i64(k) <= n; ++k)
                s += det[k] * inv[n - k];
            inv[n] = -s;
        }
        Cyc weight = t.values[target][ci].conj() * Rat(cl.size);
        for (i64 n = 0; n <= N; ++n) acc[n] += inv[n] * weight;
    }
    PowerSeries route1;
    route1.c.assign(N + 1, 0);
    for (i64 n = 0; n <= N; ++n) {
        Rat v = acc[n].rational() * Rat(1, t.order());
        if (!v.is_integer() || v.num < 0)
            throw MError("NonIntegralCoefficient", "molien coefficient " + v.str());
        route1.c[n] = v.num;
    }

    // route 2: inner products against symmetric powers; must agree
    ClassFunction tgt = ClassFunction::of_irrep(t, target);
    for (i64 n = 0; n <= N; ++n) {
        Rat m = inner_product(sym_power(t, source, n), tgt);
        if (!m.is_integer() || m.num != route1.c[n])
            throw MError("NonIntegralCoefficient",
                         "molien routes disagree at degree " + std::to_string(n) + ": " +
                             std::to_string(route1.c[n]) + " vs " + m.str());
    }
    return route1;
}

} // namespace modrep
