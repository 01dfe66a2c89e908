#pragma once

#include "intutil.hpp"
#include <vector>

namespace modrep {

bool is_prime(i64 n);
i64 powmod(i64 base, i64 exp, i64 mod);
i64 invmod(i64 a, i64 mod);

// Legendre symbol (a|p) in {-1,0,1} for odd prime p
int legendre(i64 a, i64 p);

// smallest primitive root mod prime p
i64 primitive_root(i64 p);

// smallest quadratic non-residue mod odd prime p
i64 nonresidue(i64 p);

i64 euler_phi(i64 n);

// prime-power factorization, sorted by prime
std::vector<std::pair<i64, int>> factorize(i64 n);

inline i64 lcm64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

} // namespace modrep
