#include "picard.hpp"
#include "moduli.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <map>

namespace modrep {

bool DyckSignature::hyperbolic() const {
    return angle_defect() > Rat(0);
}

Rat DyckSignature::angle_defect() const {
    Rat s(n() - 2);
    for (i64 ei : e) s -= Rat(1, ei);
    return s;
}

bool DyckSignature::pairwise_coprime() const {
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            if (std::gcd(e[i], e[j]) != 1) return false;
    return true;
}

std::vector<i64> elementary_divisors(std::vector<i64> orders) {
    std::map<i64, std::vector<int>> primes;  // prime -> exponents, descending
    for (i64 o : orders)
        for (auto& [q, ex] : factorize(o)) primes[q].push_back(ex);
    size_t layers = 0;
    for (auto& [q, v] : primes) {
        std::sort(v.rbegin(), v.rend());
        layers = std::max(layers, v.size());
    }
    std::vector<i64> out(layers, 1);
    for (auto& [q, v] : primes)
        for (size_t i = 0; i < v.size(); ++i) {
            i64 f = 1;
            for (int k = 0; k < v[i]; ++k) f *= q;
            out[i] = mul_checked(out[i], f);  // layer 0 = largest divisor
        }
    std::sort(out.begin(), out.end());
    while (!out.empty() && out.front() == 1) out.erase(out.begin());
    return out;
}

PicardStructure picard_structure(const DyckSignature& sig) {
    for (i64 ei : sig.e)
        if (ei < 2) throw MError("BadSignature", "ramification indices must be >= 2");
    if (!sig.hyperbolic())
        throw MError("NotHyperbolic", "signature is not hyperbolic");

    PicardStructure ps;
    ps.sig = sig;
    i64 n = sig.n();

    // d_k = gcd of all k-fold products of the e_i
    std::vector<i64> d(n + 1, 0);
    d[0] = 1;
    for (i64 ei : sig.e)
        for (i64 k = n; k >= 1; --k) {
            i64 withe = d[k - 1] == 0 ? 0 : mul_checked(d[k - 1], ei);
            d[k] = std::gcd(d[k], withe);
        }
    ps.d_ladder.assign(d.begin() + 1, d.end() - 1);  // d_1 .. d_{n-1}

    for (i64 k = 1; k < n; ++k) {
        i64 q = d[k] / (k == 1 ? 1 : d[k - 1]);
        if (q > 1) ps.torsion.push_back(q);
    }
    std::sort(ps.torsion.begin(), ps.torsion.end());

    i64 N = 1;
    for (i64 ei : sig.e) N = lcm64(N, ei);
    ps.N = N;
    // consistency: Z/N + torsion has the same elementary divisors as sum Z/e_i
    {
        std::vector<i64> lhs = ps.torsion;
        lhs.push_back(N);
        if (elementary_divisors(lhs) != elementary_divisors(sig.e))
            throw std::logic_error("torsion decomposition inconsistent with relation lattice");
    }

    Rat K = Rat(N) * sig.angle_defect();
    if (!K.is_integer())
        throw MError("NonIntegralCanonicalExponent", "canonical class exponent " + K.str());
    ps.canonical_exponent = K.num;
    return ps;
}

i64 genus(const DyckSignature& sig, i64 group_order) {
    Rat two_g_minus_2 = Rat(group_order) * sig.angle_defect();
    if (!two_g_minus_2.is_integer() || mod_pos(two_g_minus_2.num, 2) != 0 || two_g_minus_2.num < 2)
        throw MError("NonIntegralGenus",
                     "|G|(n-2-sum 1/e_i) = " + two_g_minus_2.str() + " is not an even integer >= 2");
    return two_g_minus_2.num / 2 + 1;
}

ModularData modular_data(i64 p) {
    if (!is_prime(p) || p < 5)
        throw MError("PrimeNotSixNPlusMinusOne", "p must be a prime >= 5");
    ModularData md;
    md.p = p;
    md.epsilon = (p % 6 == 1) ? 1 : -1;
    md.n = (p - md.epsilon) / 6;
    md.deg_lambda = (p * p - 1) / 24;
    md.group_order = p * (p * p - 1) / 2;
    md.canonical_is_lambda_power = 2 * p - 12;
    md.deg_canonical = md.canonical_is_lambda_power * md.deg_lambda;
    md.genus = md.deg_canonical / 2 + 1;
    md.degenerate = (p == 5);
    md.invariant_class_degree = (p * p - 1) / 12;
    md.orbit_combination_degree = -md.epsilon * 5 * p * (p * p - 1) / 12;
    return md;
}

std::pair<i64, i64> embedding_degrees(i64 p) {
    ModularData md = modular_data(p);
    if (p < 7) throw MError("PrimeTooSmall", "embedding degrees need p >= 7");
    Rat z = Rat((p - 3)) * Rat(p * p - 1, 48);
    Rat a = Rat((p - 1)) * Rat(p * p - 1, 48);
    if (!z.is_integer() || !a.is_integer())
        throw std::logic_error("embedding degree formulas must be integral");
    (void)md;
    return {z.num, a.num};
}

i64 rr_dimension(i64 p, i64 a) {
    ModularData md = modular_data(p);
    i64 deg = a * md.deg_lambda;
    i64 K = 2 * md.genus - 2;
    if (deg < K) throw MError("BelowCanonicalRange", "degree below canonical; no closed form here");
    if (deg == K) return md.genus;
    return deg - md.genus + 1;
}

EquivariantSection chevalley_weil(const CharacterTable& t, i64 a) {
    i64 p = t.group.p;
    ModularData md = modular_data(p);
    if (a < 0) throw MError("IndexOutOfRange", "exponent must be nonnegative");
    bool odd = (a % 2) != 0;
    if (odd && t.group.variant != Variant::SL2)
        throw MError("TableMismatch", "odd powers of lambda need the SL table");
    if (!odd && t.group.variant != Variant::PSL2)
        throw MError("TableMismatch", "even powers of lambda need the PSL table");

    i64 deg = a * md.deg_lambda;
    i64 K = 2 * md.genus - 2;
    if (deg < K) throw MError("BelowCanonicalRange", "degree below canonical range");

    auto iso = lambda_isotropy(p);
    std::array<i64, 3> s{iso[0], iso[1], iso[2]};
    std::array<i64, 3> e{2, 3, p};

    // locate the three stabilizer-generator classes
    std::array<int, 3> cls{-1, -1, -1};
    if (odd) {
        for (size_t c = 0; c < t.classes.size(); ++c) {
            const auto& cl = t.classes[c];
            if (cl.element_order == 4 && cl.rep.trace() == 0) cls[0] = int(c);
            if (cl.element_order == 6 && cl.rep.trace() == 1) cls[1] = int(c);
            if (cl.name == "zu+") cls[2] = int(c);
        }
    } else {
        for (size_t c = 0; c < t.classes.size(); ++c) {
            const auto& cl = t.classes[c];
            if (cl.element_order == 2) cls[0] = int(c);
            if (cl.element_order == 3) cls[1] = int(c);
            if (cl.name == "u+") cls[2] = int(c);
        }
    }
    for (int c : cls)
        if (c < 0) throw std::logic_error("stabilizer class not found");

    // weight exponents of lambda^a at the three orbifold points
    std::array<i64, 3> cexp;
    for (int i = 0; i < 3; ++i) {
        if (odd) {
            i64 st = mod_pos(s[i], e[i]);
            if (st % 2 == 0) st += e[i];  // odd lift mod 2e (central element acts by -1)
            cexp[i] = mod_pos(a * st, 2 * e[i]);
        } else {
            cexp[i] = mod_pos((a / 2) * mod_pos(s[i], e[i]), e[i]);
        }
    }

    EquivariantSection out;
    out.p = p;
    out.a = a;
    out.decomposition.table = &t;
    i64 halfG = md.group_order;  // |PSL(2,p)|
    i64 total = 0;
    for (size_t w = 0; w < t.irreps.size(); ++w) {
        bool faithful = !t.irreps[w].factors_through_psl;
        if (odd != faithful && t.group.variant == Variant::SL2) continue;
        Rat m = Rat(t.irreps[w].dim) + Rat(deg * t.irreps[w].dim, halfG);
        if (deg == K && t.irreps[w].series == "trivial") m += Rat(1);
        for (int i = 0; i < 3; ++i) {
            i64 period = odd ? 2 * e[i] : e[i];
            auto mults = eigenvalue_multiset(t, int(w), cls[i]);
            if (i64(mults.size()) != period)
                throw std::logic_error("stabilizer class order mismatch");
            for (i64 r = 0; r < period; ++r) {
                if (!mults[r]) continue;
                m -= Rat(mults[r]) * Rat(mod_pos(r - cexp[i], period), period);
            }
        }
        if (!m.is_integer() || m.num < 0)
            throw std::logic_error("non-integral multiplicity in equivariant sections: " + m.str());
        if (m.num > 0) out.decomposition.mult[int(w)] = m.num;
        total += m.num * t.irreps[w].dim;
    }
    out.dimension = total;
    if (total != rr_dimension(p, a))
        throw std::logic_error("equivariant section dimension disagrees with Riemann-Roch");
    return out;
}

} // namespace modrep
