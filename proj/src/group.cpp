#include "group.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace modrep {

GroupElement GroupElement::make(i64 p, i64 a, i64 b, i64 c, i64 d, bool projective) {
    GroupElement e{p, {mod_pos(a, p), mod_pos(b, p), mod_pos(c, p), mod_pos(d, p)}, projective};
    i64 det = mod_pos(e.m[0] * e.m[3] - e.m[1] * e.m[2], p);
    if (det != 1) throw MError("BadElement", "determinant is not 1");
    if (projective) {
        for (i64 v : e.m) {
            if (v == 0) continue;
            if (v > (p - 1) / 2)
                for (auto& w : e.m) w = mod_pos(-w, p);
            break;
        }
    }
    return e;
}

GroupElement GroupElement::mul(const GroupElement& o) const {
    return make(p,
                m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3],
                projective);
}

GroupElement GroupElement::inverse() const {
    return make(p, m[3], -m[1], -m[2], m[0], projective);
}

GroupElement GroupElement::pow(i64 k) const {
    GroupElement r = make(p, 1, 0, 0, 1, projective);
    GroupElement base = *this;
    if (k < 0) { base = inverse(); k = -k; }
    while (k > 0) {
        if (k & 1) r = r.mul(base);
        base = base.mul(base);
        k >>= 1;
    }
    return r;
}

bool GroupElement::is_identity() const {
    if (m[1] != 0 || m[2] != 0) return false;
    if (m[0] == 1 && m[3] == 1) return true;
    return projective && m[0] == p - 1 && m[3] == p - 1;
}

i64 GroupElement::key() const {
    return ((m[0] * p + m[1]) * p + m[2]) * p + m[3];
}

GroupDescriptor build_group(i64 p, Variant variant) {
    if (!is_prime(p)) throw MError("NonPrime", "p = " + std::to_string(p) + " is not prime");
    if (p < 5) throw MError("PrimeTooSmall", "p must be at least 5");
    GroupDescriptor g;
    g.p = p;
    g.variant = variant;
    g.order = p * (p - 1) * (p + 1);
    if (variant == Variant::PSL2) g.order /= 2;
    return g;
}

namespace {

i64 sqrt_mod(i64 x, i64 p) {
    x = mod_pos(x, p);
    for (i64 s = 0; s <= p / 2; ++s)
        if (s * s % p == x) return s;
    return -1;
}

struct F2Elt { i64 x, y; };  // x + y*sqrt(D) in F_p[sqrt D]

F2Elt f2mul(const F2Elt& u, const F2Elt& v, i64 D, i64 p) {
    return {mod_pos(u.x * v.x % p + D % p * (u.y * v.y % p), p),
            mod_pos(u.x * v.y + u.y * v.x, p)};
}

// generator of the norm-1 subgroup of F_{p^2}^*, order p+1
F2Elt norm_one_generator(i64 p, i64 D) {
    for (i64 y = 1; y < p; ++y) {
        i64 x2 = mod_pos(1 + D * y % p * y, p);
        i64 x = sqrt_mod(x2, p);
        if (x < 0) continue;
        for (i64 xc : {x, mod_pos(-x, p)}) {
            F2Elt cand{xc, y};
            // order must be exactly p+1
            bool full = true;
            for (auto& [q, e] : factorize(p + 1)) {
                F2Elt acc{1, 0}, base = cand;
                i64 k = (p + 1) / q;
                while (k) {
                    if (k & 1) acc = f2mul(acc, base, D, p);
                    base = f2mul(base, base, D, p);
                    k >>= 1;
                }
                if (acc.x == 1 && acc.y == 0) { full = false; break; }
            }
            if (full) return cand;
        }
    }
    throw std::logic_error("no norm-1 generator found");
}

struct SLData {
    i64 p;
    i64 g;                            // primitive root
    i64 nr;                           // smallest non-residue
    i64 D;                            // non-residue used for the quadratic extension
    F2Elt beta;                       // norm-1 generator, order p+1
    std::vector<i64> split_dlog;      // g^l -> l
    std::unordered_map<i64, i64> nonsplit_trace;  // trace(beta^m) -> m, 1<=m<=(p-1)/2
};

SLData sl_data(i64 p) {
    SLData d;
    d.p = p;
    d.g = primitive_root(p);
    d.nr = nonresidue(p);
    d.D = d.nr;
    d.beta = norm_one_generator(p, d.D);
    d.split_dlog.assign(p, -1);
    i64 v = 1;
    for (i64 l = 0; l < p - 1; ++l) {
        d.split_dlog[v] = l;
        v = v * d.g % p;
    }
    F2Elt b{1, 0};
    for (i64 m = 1; m <= (p - 1) / 2; ++m) {
        b = f2mul(b, d.beta, d.D, p);
        d.nonsplit_trace[mod_pos(2 * b.x, p)] = m;
    }
    return d;
}

GroupElement nonsplit_rep(const SLData& d, i64 m) {
    F2Elt b{1, 0};
    for (i64 i = 0; i < m; ++i) b = f2mul(b, d.beta, d.D, d.p);
    // matrix of multiplication by x + y*sqrt(D) on basis {1, sqrt(D)}
    return GroupElement::make(d.p, b.x, d.D * b.y, b.y, b.x, false);
}

// fold an exponent of a torus of order n onto the class index set:
// returns (0 -> identity, 1 -> -identity, else 1-based index into 1..(n/2-1))
i64 fold_exponent(i64 x, i64 n) {
    x = mod_pos(x, n);
    return std::min(x, n - x);
}

std::vector<ConjugacyClass> sl_classes(i64 p) {
    SLData d = sl_data(p);
    std::vector<ConjugacyClass> cls;
    auto E = [&](i64 a, i64 b, i64 c, i64 dd) { return GroupElement::make(p, a, b, c, dd, false); };

    i64 half = (p * p - 1) / 2;
    int n_split = int((p - 3) / 2);
    int n_nonsplit = int((p - 1) / 2);
    int base_split = 6;
    int base_nonsplit = base_split + n_split;

    // index helpers for power maps
    auto split_index = [&](i64 x) -> int {
        i64 f = fold_exponent(x, p - 1);
        if (f == 0) return 0;
        if (f == (p - 1) / 2) return 1;
        return base_split + int(f) - 1;
    };
    auto nonsplit_index = [&](i64 x) -> int {
        i64 f = fold_exponent(x, p + 1);
        if (f == 0) return 0;
        if (f == (p + 1) / 2) return 1;
        return base_nonsplit + int(f) - 1;
    };
    auto unipotent_index = [&](i64 sign, i64 t) -> int {
        // sign in {0,1} (power of -I), t in F_p the translation amount
        if (t == 0) return sign == 0 ? 0 : 1;
        bool qr = legendre(t, p) == 1;
        if (sign == 0) return qr ? 2 : 3;
        return qr ? 4 : 5;
    };

    {
        ConjugacyClass c;
        c.rep = E(1, 0, 0, 1); c.size = 1; c.element_order = 1; c.name = "e";
        c.power_to_class = {0};
        cls.push_back(c);
    }
    {
        ConjugacyClass c;
        c.rep = E(-1, 0, 0, -1); c.size = 1; c.element_order = 2; c.name = "z";
        c.power_to_class = {0, 1};
        cls.push_back(c);
    }
    for (int variant = 0; variant < 2; ++variant) {  // u+, u-
        ConjugacyClass c;
        i64 u = variant == 0 ? 1 : d.nr;
        c.rep = E(1, u, 0, 1); c.size = half; c.element_order = p;
        c.name = variant == 0 ? "u+" : "u-";
        c.power_to_class.resize(p);
        for (i64 j = 0; j < p; ++j) c.power_to_class[j] = unipotent_index(0, mod_pos(j * u, p));
        cls.push_back(c);
    }
    for (int variant = 0; variant < 2; ++variant) {  // zu+, zu-
        ConjugacyClass c;
        i64 u = variant == 0 ? 1 : d.nr;
        c.rep = E(-1, -u, 0, -1); c.size = half; c.element_order = 2 * p;
        c.name = variant == 0 ? "zu+" : "zu-";
        c.power_to_class.resize(2 * p);
        for (i64 j = 0; j < 2 * p; ++j)
            c.power_to_class[j] = unipotent_index(j % 2, mod_pos(j * u, p));
        cls.push_back(c);
    }
    for (int l = 1; l <= n_split; ++l) {
        ConjugacyClass c;
        i64 x = powmod(d.g, l, p);
        c.rep = E(x, 0, 0, invmod(x, p));
        c.size = p * (p + 1);
        c.element_order = (p - 1) / std::gcd<i64>(l, p - 1);
        c.name = "a" + std::to_string(l);
        c.power_to_class.resize(c.element_order);
        for (i64 j = 0; j < c.element_order; ++j) c.power_to_class[j] = split_index(l * j);
        cls.push_back(c);
    }
    for (int m = 1; m <= n_nonsplit; ++m) {
        ConjugacyClass c;
        c.rep = nonsplit_rep(d, m);
        c.size = p * (p - 1);
        c.element_order = (p + 1) / std::gcd<i64>(m, p + 1);
        c.name = "b" + std::to_string(m);
        c.power_to_class.resize(c.element_order);
        for (i64 j = 0; j < c.element_order; ++j) c.power_to_class[j] = nonsplit_index(m * j);
        cls.push_back(c);
    }
    return cls;
}

int sl_classify(const SLData& d, const std::vector<ConjugacyClass>&, const GroupElement& x) {
    i64 p = d.p;
    if (x.m[1] == 0 && x.m[2] == 0 && x.m[0] == x.m[3]) {
        if (x.m[0] == 1) return 0;
        if (x.m[0] == p - 1) return 1;
    }
    i64 t = x.trace();
    auto unip_type = [&](const GroupElement& a) -> bool {  // true -> residue type (u+)
        i64 gamma = a.m[2];
        if (gamma != 0) return legendre(mod_pos(-gamma, p), p) == 1;
        return legendre(a.m[1], p) == 1;
    };
    if (t == 2) return unip_type(x) ? 2 : 3;
    if (t == p - 2) {
        GroupElement y = GroupElement::make(p, -x.m[0], -x.m[1], -x.m[2], -x.m[3], false);
        return unip_type(y) ? 4 : 5;
    }
    i64 disc = mod_pos(t * t - 4, p);
    if (legendre(disc, p) == 1) {
        i64 s = sqrt_mod(disc, p);
        i64 ev = mod_pos((t + s) * invmod(2, p), p);
        i64 l = d.split_dlog[ev];
        i64 f = fold_exponent(l, p - 1);
        return 6 + int(f) - 1;
    }
    auto it = d.nonsplit_trace.find(t);
    if (it == d.nonsplit_trace.end()) throw std::logic_error("classify: trace not found");
    return 6 + int((p - 3) / 2) + int(it->second) - 1;
}

// fusion of SL classes under multiplication by -I, giving the PSL classes
struct Fusion {
    std::vector<ConjugacyClass> sl;
    std::vector<int> partner;     // SL class index of z*rep
    std::vector<int> sl_to_psl;   // SL class index -> PSL class index
    std::vector<int> psl_member;  // PSL class index -> smallest SL member
};

Fusion fuse(i64 p) {
    Fusion f;
    f.sl = sl_classes(p);
    SLData d = sl_data(p);
    int n = int(f.sl.size());
    f.partner.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& r = f.sl[i].rep;
        GroupElement neg = GroupElement::make(p, -r.m[0], -r.m[1], -r.m[2], -r.m[3], false);
        f.partner[i] = sl_classify(d, f.sl, neg);
    }
    f.sl_to_psl.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (f.sl_to_psl[i] >= 0) continue;
        int j = f.partner[i];
        int id = int(f.psl_member.size());
        f.sl_to_psl[i] = id;
        f.sl_to_psl[j] = id;
        f.psl_member.push_back(i);
    }
    return f;
}

std::vector<ConjugacyClass> psl_classes(i64 p) {
    Fusion f = fuse(p);
    std::vector<ConjugacyClass> out;
    for (size_t k = 0; k < f.psl_member.size(); ++k) {
        int i = f.psl_member[k];
        const auto& s = f.sl[i];
        ConjugacyClass c;
        c.rep = GroupElement::make(p, s.rep.m[0], s.rep.m[1], s.rep.m[2], s.rep.m[3], true);
        c.size = (f.partner[i] == i) ? s.size / 2 : s.size;
        // projective order: first j with rep^j central
        i64 ord = 1;
        for (i64 j = 1; j <= s.element_order; ++j) {
            int pj = s.power_to_class[j % s.element_order];
            if (pj == 0 || pj == 1) { ord = j; break; }
        }
        c.element_order = ord;
        c.name = s.name;
        c.power_to_class.resize(ord);
        for (i64 j = 0; j < ord; ++j)
            c.power_to_class[j] = f.sl_to_psl[s.power_to_class[j % s.element_order]];
        out.push_back(c);
    }
    return out;
}

void fill_inverse_classes(const GroupDescriptor& g, std::vector<ConjugacyClass>& cls) {
    for (auto& c : cls) {
        // rep^(order-1) = rep^{-1}
        c.inverse_class = c.power_to_class[(c.element_order - 1) % c.element_order];
    }
    (void)g;
}

} // namespace

std::vector<ConjugacyClass> conjugacy_classes(const GroupDescriptor& g) {
    auto cls = g.variant == Variant::SL2 ? sl_classes(g.p) : psl_classes(g.p);
    fill_inverse_classes(g, cls);
    return cls;
}

int power_class(const std::vector<ConjugacyClass>& classes, int c, i64 j) {
    if (c < 0 || c >= int(classes.size())) throw MError("IndexOutOfRange", "class index");
    const auto& cl = classes[c];
    return cl.power_to_class[mod_pos(j, cl.element_order)];
}

int classify_element(const GroupDescriptor& g,
                     const std::vector<ConjugacyClass>& classes,
                     const GroupElement& x) {
    SLData d = sl_data(g.p);
    if (g.variant == Variant::SL2) return sl_classify(d, sl_classes(g.p), x);
    Fusion f = fuse(g.p);
    GroupElement lift = GroupElement::make(g.p, x.m[0], x.m[1], x.m[2], x.m[3], false);
    int slc = sl_classify(d, f.sl, lift);
    (void)classes;
    return f.sl_to_psl[slc];
}

std::vector<ConjugacyClass> conjugacy_classes_bruteforce(const GroupDescriptor& g) {
    i64 p = g.p;
    bool proj = g.variant == Variant::PSL2;
    std::vector<GroupElement> elems;
    std::unordered_map<i64, int> index;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 0; c < p; ++c)
                for (i64 dd = 0; dd < p; ++dd) {
                    if (mod_pos(a * dd - b * c, p) != 1) continue;
                    GroupElement e = GroupElement::make(p, a, b, c, dd, proj);
                    if (index.count(e.key())) continue;
                    index[e.key()] = int(elems.size());
                    elems.push_back(e);
                }
    if (i64(elems.size()) != g.order)
        throw std::logic_error("enumeration produced wrong group order");

    GroupElement S = GroupElement::make(p, 0, -1, 1, 0, proj);
    GroupElement T = GroupElement::make(p, 1, 1, 0, 1, proj);
    GroupElement Si = S.inverse(), Ti = T.inverse();

    std::vector<int> cls_of(elems.size(), -1);
    std::vector<ConjugacyClass> out;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (cls_of[i] >= 0) continue;
        int id = int(out.size());
        std::deque<int> todo{int(i)};
        cls_of[i] = id;
        i64 size = 0;
        while (!todo.empty()) {
            int j = todo.front(); todo.pop_front();
            ++size;
            const GroupElement& x = elems[j];
            for (int gen = 0; gen < 2; ++gen) {
                GroupElement y = gen == 0 ? S.mul(x).mul(Si) : T.mul(x).mul(Ti);
                int k = index.at(y.key());
                if (cls_of[k] < 0) { cls_of[k] = id; todo.push_back(k); }
            }
        }
        ConjugacyClass c;
        c.rep = elems[i];
        c.size = size;
        GroupElement pw = elems[i];
        i64 ord = 1;
        while (!pw.is_identity()) { pw = pw.mul(elems[i]); ++ord; }
        c.element_order = ord;
        c.name = "bf" + std::to_string(id);
        out.push_back(c);
    }
    // power maps via the element index
    for (auto& c : out) {
        c.power_to_class.resize(c.element_order);
        GroupElement pw = GroupElement::make(p, 1, 0, 0, 1, proj);
        for (i64 j = 0; j < c.element_order; ++j) {
            c.power_to_class[j] = cls_of[index.at(pw.key())];
            pw = pw.mul(c.rep);
        }
    }
    fill_inverse_classes(g, out);
    return out;
}

} // namespace modrep
