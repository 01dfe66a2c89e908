#pragma once

#include "repring.hpp"

namespace modrep {

struct DyckSignature {
    std::vector<i64> e;  // ramification indices, each >= 2

    i64 n() const { return i64(e.size()); }
    bool hyperbolic() const;          // sum 1/e_i < n - 2
    Rat angle_defect() const;         // n - 2 - sum 1/e_i
    bool pairwise_coprime() const;
};

struct PicardStructure {
    DyckSignature sig;
    i64 free_rank = 1;
    std::vector<i64> torsion;         // nontrivial elementary divisors, ascending chain
    i64 N = 1;                        // lcm(e_i), index of the pullback class
    i64 canonical_exponent = 0;       // K in terms of the generator
    std::vector<i64> d_ladder;        // d_k = gcd of all k-fold products of the e_i
};

PicardStructure picard_structure(const DyckSignature& sig);

i64 genus(const DyckSignature& sig, i64 group_order);

struct ModularData {
    i64 p = 0;
    int epsilon = 0;                  // p = 6n + epsilon
    i64 n = 0;
    i64 genus = 0;
    i64 deg_lambda = 0;
    i64 group_order = 0;              // |PSL(2,p)|
    i64 deg_canonical = 0;
    i64 canonical_is_lambda_power = 0;  // 2p - 12
    i64 linearizable_index = 2;
    i64 schur_d = 2;
    bool degenerate = false;          // p = 5
    // degree bookkeeping for the invariant divisor class group: the claimed
    // generator degree and the degree of the orbit combination
    // eps*(D_2 - D_3 - p D_p), which do not agree; both are reported
    i64 invariant_class_degree = 0;       // (p^2-1)/12
    i64 orbit_combination_degree = 0;     // -eps * 5p(p^2-1)/12
};

ModularData modular_data(i64 p);

// degrees of the images under |lambda^{(p-3)/2}| and |lambda^{(p+1)/2}|
std::pair<i64, i64> embedding_degrees(i64 p);

// h^0(lambda^a) by Riemann-Roch: deg - g + 1 above the canonical degree,
// g at it; errors below it
i64 rr_dimension(i64 p, i64 a);

struct EquivariantSection {
    i64 p = 0;
    i64 a = 0;
    i64 dimension = 0;
    Decomposition decomposition;
};

// G-module structure of H^0(X(p), lambda^a) via equivariant Riemann-Roch
// from the isotropy exponents of lambda; uses the SL table for odd a and
// the PSL table for even a.  The table must outlive the result.
EquivariantSection chevalley_weil(const CharacterTable& t, i64 a);

// convenience: elementary divisor chain of a direct sum of cyclic groups
std::vector<i64> elementary_divisors(std::vector<i64> orders);

} // namespace modrep
