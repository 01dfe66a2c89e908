#pragma once

#include "chartab.hpp"
#include <map>

namespace modrep {

struct ClassFunction {
    const CharacterTable* table = nullptr;
    std::vector<Cyc> values;  // indexed by class

    static ClassFunction of_irrep(const CharacterTable& t, int irrep);
    Cyc at_identity() const { return values[0]; }
};

ClassFunction cf_add(const ClassFunction& f, const ClassFunction& g);
ClassFunction cf_mul(const ClassFunction& f, const ClassFunction& g);  // tensor product
ClassFunction cf_conj(const ClassFunction& f);                         // dual

// (1/|G|) sum size(c) f(c) conj(g(c)); exact rational
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

// multiplicities of irreducibles, all nonnegative integers
struct Decomposition {
    const CharacterTable* table = nullptr;
    std::map<int, i64> mult;  // irrep index -> multiplicity > 0

    i64 total_dimension() const;
    std::string str() const;                       // e.g. "V1 + 2*V6 + V8"
    std::map<std::string, i64> by_name() const;
};

Decomposition decompose(const ClassFunction& f);

// characters of symmetric / exterior powers via the Newton recursion on
// power-map characters chi(g^k)
ClassFunction sym_power(const CharacterTable& t, int irrep, i64 n);
ClassFunction ext_power(const CharacterTable& t, int irrep, i64 n);

// eigenvalue multiset of irrep at class c: mults[r] = multiplicity of
// zeta_ord^r, recovered by discrete Fourier inversion of chi(c^j)
std::vector<i64> eigenvalue_multiset(const CharacterTable& t, int irrep, int cls);

struct PowerSeries {
    std::vector<i64> c;  // c[0..N]
    i64 N() const { return i64(c.size()) - 1; }
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

struct RationalGF {
    std::vector<i64> num;  // polynomial coefficients, ascending
    std::vector<i64> den;
};

PowerSeries expand_rational_gf(const RationalGF& f, i64 N);

// coefficient c_n = multiplicity of target in S^n(source), computed along
// two independent routes (rational-function average of 1/det(1 - t rho(c)),
// and iterated symmetric-power inner products) which must agree
PowerSeries molien(const CharacterTable& t, int target, int source, i64 N);

} // namespace modrep
