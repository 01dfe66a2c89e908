#include "numbthy.hpp"

namespace modrep {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 powmod(i64 base, i64 exp, i64 mod) {
    i64 r = 1 % mod;
    base = mod_pos(base, mod);
    while (exp > 0) {
        if (exp & 1) r = i64((i128(r) * base) % mod);
        base = i64((i128(base) * base) % mod);
        exp >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 mod) {
    i64 g = mod, x = 0, x1 = 1, a1 = mod_pos(a, mod);
    while (a1 != 0) {
        i64 q = g / a1;
        g -= q * a1; std::swap(g, a1);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("invmod: not invertible");
    return mod_pos(x, mod);
}

int legendre(i64 a, i64 p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    i64 r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

i64 primitive_root(i64 p) {
    if (p == 2) return 1;
    auto fac = factorize(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto& [q, e] : fac)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

i64 nonresidue(i64 p) {
    for (i64 a = 2; a < p; ++a)
        if (legendre(a, p) == -1) return a;
    throw std::logic_error("no non-residue found");
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto& [q, e] : factorize(n)) r = r / q * (q - 1);
    return r;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.push_back({d, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

} // namespace modrep
