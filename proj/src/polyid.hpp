#pragma once

#include "intutil.hpp"
#include <map>
#include <string>
#include <vector>

namespace modrep {

// exact sparse multivariate polynomial with integer coefficients
struct SparsePoly {
    std::vector<std::string> vars;
    std::map<std::vector<int>, i64> terms;  // exponent vector -> nonzero coefficient

    static SparsePoly zero(std::vector<std::string> vars);
    static SparsePoly constant(std::vector<std::string> vars, i64 c);
    static SparsePoly variable(std::vector<std::string> vars, const std::string& name);

    bool is_zero() const { return terms.empty(); }
    SparsePoly neg() const;
    SparsePoly scaled(i64 s) const;
    SparsePoly derivative(const std::string& var) const;
    i64 eval(const std::vector<i64>& point) const;
    std::string str() const;

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

struct PolyMatrix {
    int n = 0;
    std::vector<SparsePoly> entries;  // row-major

    SparsePoly& at(int i, int j) { return entries[i * n + j]; }
    const SparsePoly& at(int i, int j) const { return entries[i * n + j]; }
    bool antisymmetric() const;
};

SparsePoly det_expand(const PolyMatrix& m);

// Pfaffian with the convention Pf([[0,1],[-1,0]]) = 1; asserts Pf^2 = det
SparsePoly pfaffian_expand(const PolyMatrix& m);

PolyMatrix hessian(const SparsePoly& f, const std::vector<std::string>& vars);

struct IdentityReport {
    std::string name;
    std::string claimed;
    std::string computed;
    bool exact_match = false;
    bool support_match = false;       // same monomials, all coefficients +-1
    bool match_up_to_sign = false;    // same monomials with equal |coefficient|
    bool uniform_sign_flip = false;   // computed == -claimed exactly
    std::string difference;
    std::string sign_pattern;         // computed coefficient signs, per monomial
    i64 specializations_checked = 0;  // random integer cross-checks performed
};

std::vector<IdentityReport> run_identity_checks();

// exact determinant of an integer matrix (Bareiss), used as the numeric
// cross-check oracle for random specializations
i64 int_det(std::vector<std::vector<i64>> m);

} // namespace modrep
