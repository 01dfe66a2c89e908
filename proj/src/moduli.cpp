#include "moduli.hpp"
#include "numbthy.hpp"

#include <algorithm>

namespace modrep {

CentralExtensionData central_extension(const DyckSignature& sig) {
    if (!sig.hyperbolic()) throw MError("NotHyperbolic", "signature is not hyperbolic");
    if (!sig.pairwise_coprime())
        throw MError("NotPerfect", "indices must be pairwise coprime for a perfect Dyck group");
    CentralExtensionData d;
    d.sig = sig;
    i64 prod = 1;
    for (i64 ei : sig.e) prod = mul_checked(prod, ei);
    Rat s = Rat(prod) * sig.angle_defect();
    if (!s.is_integer()) throw std::logic_error("s must be integral");
    d.s = s.num;
    Rat b(1, prod);
    for (i64 ei : sig.e) {
        i64 bi = (ei == 1) ? 0 : invmod(d.s, ei);
        d.b_i.push_back(bi);
        b += Rat(bi, ei);
    }
    if (!b.is_integer()) throw MError("NonIntegralB", "product relation exponent " + b.str());
    d.b = b.num;
    return d;
}

bool su2_admissible(const Rat& t1, const Rat& t2, const Rat& t3) {
    const Rat zero(0), one(1), two(2);
    for (const Rat* t : {&t1, &t2, &t3})
        if (!(*t > zero) || !(*t < one))
            throw MError("AngleOutOfRange", "angles must lie strictly between 0 and pi");
    Rat lo = abs(t1 - t2);
    Rat hi = t1 + t2;
    if (two - hi < hi) hi = two - hi;
    return lo < t3 && t3 < hi;
}

std::array<i64, 3> lambda_isotropy(i64 p) {
    ModularData md = modular_data(p);
    if (p < 7) throw MError("PrimeTooSmall", "isotropy exponents need p >= 7");
    std::array<i64, 3> s{1, (3 - md.epsilon) / 2, md.epsilon == 1 ? md.n : p - md.n};
    std::array<i64, 3> e{2, 3, p};
    for (int i = 0; i < 3; ++i)
        if (mod_pos((p - 6) * s[i], e[i]) != 1)
            throw std::logic_error("isotropy exponent fails its congruence");
    return s;
}

ModuliCensus su2_census(i64 p) {
    ModularData md = modular_data(p);
    if (p < 7) throw MError("PrimeTooSmall", "census needs p >= 7");
    CentralExtensionData ext = central_extension(DyckSignature{{2, 3, p}});

    ModuliCensus cen;
    cen.p = p;
    cen.n = md.n;
    cen.epsilon = md.epsilon;
    cen.rank = 2;

    // enumerate rotation data (l1, l2, l3, central sign eta); the relations
    // g_i^{e_i} = t^{b_i} force eigenvalue parities (-1)^{l_i} = eta^{b_i}
    std::array<i64, 3> e{2, 3, p};
    for (int eta = 1; eta >= -1; eta -= 2) {
        for (i64 l1 = 1; l1 < e[0]; ++l1)
            for (i64 l2 = 1; l2 < e[1]; ++l2)
                for (i64 l3 = 1; l3 < e[2]; ++l3) {
                    std::array<i64, 3> l{l1, l2, l3};
                    bool ok = true;
                    for (int i = 0; i < 3; ++i) {
                        int lhs = (l[i] % 2 == 0) ? 1 : -1;
                        int rhs = (ext.b_i[i] % 2 == 0) ? 1 : eta;
                        if (lhs != rhs) { ok = false; break; }
                    }
                    if (!ok) continue;
                    int product_sign = (ext.b % 2 == 0) ? 1 : eta;
                    Rat t1(l1, e[0]), t2(l2, e[1]), t3(l3, e[2]);
                    Rat t3eff = product_sign == 1 ? t3 : Rat(1) - t3;
                    if (!su2_admissible(t1, t2, t3eff)) continue;

                    TraceTriple tt;
                    tt.p = p;
                    tt.epsilon = md.epsilon;
                    tt.n = md.n;
                    tt.ell3 = l3;
                    tt.central_sign = eta;
                    tt.product_sign = product_sign;
                    tt.angles = {t1, t2, t3};
                    // canonical k: representative of {l3, p-l3} with the
                    // closed-form parity (odd iff epsilon = +1)
                    bool want_odd = md.epsilon == 1;
                    tt.k = ((l3 % 2 != 0) == want_odd) ? l3 : p - l3;
                    cen.items.push_back(tt);
                }
    }
    std::sort(cen.items.begin(), cen.items.end(),
              [](const TraceTriple& a, const TraceTriple& b) { return a.k < b.k; });
    cen.count = i64(cen.items.size());

    // closed form: k odd in [n+1, 5n] for eps = +1, k even in [n, 5n-1] for eps = -1
    std::vector<i64> expected;
    if (md.epsilon == 1) {
        for (i64 k = md.n + 1; k <= 5 * md.n; ++k)
            if (k % 2 != 0) expected.push_back(k);
    } else {
        for (i64 k = md.n; k <= 5 * md.n - 1; ++k)
            if (k % 2 == 0) expected.push_back(k);
    }
    std::vector<i64> got;
    for (auto& it : cen.items) got.push_back(it.k);
    if (got != expected || cen.count != 2 * md.n)
        throw MError("CensusMismatch",
                     "rotation-number enumeration disagrees with the closed form at p = " +
                         std::to_string(p));

    for (auto& it : cen.items) cen.exponents.push_back(exponent_of(p, it.k));
    return cen;
}

ExponentSolution exponent_of(i64 p, i64 k) {
    ModularData md = modular_data(p);
    if (k <= 0 || k >= p) throw MError("NoSolution", "k must lie strictly between 0 and p");
    i64 n = md.n, eps = md.epsilon;
    // The congruence a n = eps k (mod 2p) is checked over the whole gauge
    // orbit of the rotation number: k <-> 2p-k (inverse generator, same
    // trace) and k <-> p-k (the central lift of the generator, which flips
    // the trace sign).  The enumerated rotation number has the parity of
    // b_3, the canonical k the parity fixed by the closed-form rule, and
    // they differ for some primes, so both pairs are required.
    const std::array<i64, 4> reps{k, 2 * p - k, p - k, p + k};
    for (i64 mag = 1; mag <= 12 * p; mag += 2) {
        i64 a = -mag;
        if (mod_pos(a, 3) != 1) continue;
        i64 an = mod_pos(a * n, 2 * p);
        for (int br = 0; br < 4; ++br)
            if (an == mod_pos(eps * reps[br], 2 * p)) return {p, k, a, br};
    }
    throw MError("NoSolution", "no exponent for (p,k) = (" + std::to_string(p) + "," +
                                   std::to_string(k) + ")");
}

i64 su3_count(i64 p) {
    ModularData md = modular_data(p);
    if (p < 7) throw MError("PrimeTooSmall", "rank-3 count needs p >= 7");
    return 3 * md.n * md.n + md.epsilon * md.n;
}

std::vector<Rank3Exponents> su3_exponents_p7() {
    return {
        {"S2E(-5,5)", {-10, 0, 10}},
        {"S2E(-11,11)", {-22, 0, 22}},
        {"V3xO", {-2, -4, 6}},
        {"V3*xO", {-6, 4, 2}},
    };
}

} // namespace modrep
