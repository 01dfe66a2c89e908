#pragma once

#include "picard.hpp"
#include <array>
#include <optional>

namespace modrep {

struct CentralExtensionData {
    DyckSignature sig;
    i64 s = 0;                 // e1...en (n - 2 - sum 1/e_i)
    std::vector<i64> b_i;      // s*b_i = 1 mod e_i, 0 <= b_i < e_i
    i64 b = 0;                 // 1/(e1...en) + sum b_i/e_i
};

CentralExtensionData central_extension(const DyckSignature& sig);

// existence of an irreducible U = SU(2) triple with prescribed rotation
// angles (in (0,pi), exact rational multiples of pi) and product identity
bool su2_admissible(const Rat& t1, const Rat& t2, const Rat& t3);

struct TraceTriple {
    i64 p = 0;
    int epsilon = 0;
    i64 n = 0;
    i64 k = 0;                // canonical rotation number (parity/range rule)
    i64 ell3 = 0;             // enumerated third rotation number; k = ell3 or p - ell3
    int central_sign = -1;    // value of the representation at the central generator
    int product_sign = 1;     // sign of rho(g1 g2 g3) relative to the identity
    std::array<Rat, 3> angles;  // rotation angles as multiples of pi
    // traces are (0, epsilon, 2cos(pi k / p)); the third is kept exact as (k, p)
    std::string trace_third() const {
        return "2cos(pi*" + std::to_string(k) + "/" + std::to_string(p) + ")";
    }
};

struct ExponentSolution {
    i64 p = 0;
    i64 k = 0;
    i64 a = 0;                // negative odd, a = 1 mod 3
    int congruence_branch = 0;  // 0: a n = eps k, 1: a n = eps (2p - k)  (mod 2p)
};

struct ModuliCensus {
    i64 p = 0;
    i64 n = 0;
    int epsilon = 0;
    int rank = 2;
    i64 count = 0;
    std::vector<TraceTriple> items;       // rank 2
    std::vector<ExponentSolution> exponents;
};

// rank-2 census by brute-force enumeration of rotation data constrained by
// the central extension relations; checked against the closed-form
// parity/range rule (throws CensusMismatch if they disagree)
ModuliCensus su2_census(i64 p);

ExponentSolution exponent_of(i64 p, i64 k);

// isotropy exponents (s1,s2,s3) of lambda, verified against
// (p-6) s_i = 1 mod e_i
std::array<i64, 3> lambda_isotropy(i64 p);

i64 su3_count(i64 p);

struct Rank3Exponents {
    std::string bundle;
    std::array<i64, 3> a;
};

// the four rank-3 exponent sequences at p = 7
std::vector<Rank3Exponents> su3_exponents_p7();

} // namespace modrep
