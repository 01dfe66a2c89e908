#pragma once

#include "moduli.hpp"
#include <complex>
#include <optional>

namespace modrep {

using cplx = std::complex<double>;

// small dense complex matrix
struct CMat {
    int n = 0;
    std::vector<cplx> a;

    CMat() = default;
    explicit CMat(int n_) : n(n_), a(n_ * n_) {}
    static CMat identity(int n);
    cplx& at(int i, int j) { return a[i * n + j]; }
    const cplx& at(int i, int j) const { return a[i * n + j]; }

    CMat mul(const CMat& o) const;
    CMat dagger() const;
    CMat scaled(cplx s) const;
    CMat sub(const CMat& o) const;
    CMat add(const CMat& o) const;
    CMat pow(i64 k) const;
    double fro() const;
    double unitarity_defect() const;  // ||A A^H - I||_F
};

CMat qr_orthonormalize(const CMat& m);  // Q factor, columns orthonormal
CMat sym_square(const CMat& a);         // induced map on Sym^2(C^2), 2x2 -> 3x3 unitary

struct ClassSpec {
    int rank = 2;
    std::array<std::vector<Rat>, 3> angles;  // eigenangles as multiples of pi
    int central_sign = 1;                    // product target = sign * I

    void validate() const;  // determinant feasibility and shape
};

struct UnitaryTuple {
    std::array<CMat, 3> a;
};

struct SolveConfig {
    unsigned seed = 20260808;
    int starts = 32;
    int max_iters = 10000;
    double tol = 1e-10;       // residual norm for success
    double stall = 1e-3;      // infeasible only if all starts stay above this
};

struct SolveReport {
    bool converged = false;
    std::optional<UnitaryTuple> tuple;
    double residual = 0;              // final ||A1 A2 A3 - target||_F
    std::vector<double> spectral_gap; // per-generator spectral mismatch
    int starts_used = 0;
    i64 iterations = 0;
    unsigned seed = 0;
};

SolveReport solve_triple(const ClassSpec& spec, const SolveConfig& cfg = {});

// Frobenius residuals of A_i^{e_i} = sign^{b_i} I and A1 A2 A3 = sign^b I
std::vector<double> verify_relations(const UnitaryTuple& t, const DyckSignature& sig,
                                     const CentralExtensionData& ext, int central_sign);

// commutant of {A1,A2,A3} is one-dimensional (threshold 1e-8)
bool irreducibility(const UnitaryTuple& t);

// class data for a rank-2 census point in canonical (parity-normalized) form;
// also valid for same-parity k outside the census, where no solution exists
ClassSpec census_spec(i64 p, i64 k);

// presentation matching census_spec: when the canonical k differs from the
// enumerated rotation number, the third generator carries an extra central
// factor, so b_3 becomes b_3 + p and b becomes b + 1
CentralExtensionData census_presentation(i64 p, i64 k);

// the four rank-3 specs at p = 7, in the order of su3_exponents_p7()
std::vector<ClassSpec> rank3_specs_p7();

} // namespace modrep
