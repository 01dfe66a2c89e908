#pragma once

#include "intutil.hpp"
#include <complex>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace modrep {

// Exact element of the cyclotomic field Q(zeta_m), stored as a sparse
// rational combination of powers zeta_m^k.  Canonical form uses the tensor
// basis over the prime-power factors of m (residue at q^e restricted to
// [0, phi(q^e))), so equality testing is exact.
class Cyc {
public:
    Cyc() : mod_(1) {}
    explicit Cyc(const Rat& r) : mod_(1) {
        if (!r.is_zero()) terms_.push_back({0, r});
    }
    Cyc(i64 n) : Cyc(Rat(n)) {}

    // zeta_m^k, scaled
    static Cyc root(i64 m, i64 k, const Rat& scale = Rat(1));

    i64 modulus() const { return mod_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rat rational() const;             // throws if not rational
    const std::vector<std::pair<i64, Rat>>& terms() const { return terms_; }

    Cyc conj() const;                 // complex conjugation zeta -> zeta^-1

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { *this = *this + b; return *this; }
    Cyc& operator-=(const Cyc& b) { *this = *this - b; return *this; }
    Cyc& operator*=(const Cyc& b) { *this = *this * b; return *this; }
    friend Cyc operator*(const Cyc& a, const Rat& s);
    friend Cyc operator*(const Rat& s, const Cyc& a) { return a * s; }

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    std::complex<double> approx() const;
    std::string str() const;          // human-readable, deterministic

private:
    i64 mod_;
    std::vector<std::pair<i64, Rat>> terms_;  // sorted by exponent, canonical

    Cyc lifted(i64 M) const;          // re-express in Q(zeta_M), mod_ | M
    friend class CycAccum;
    static void canonicalize(i64 m, std::unordered_map<i64, Rat>& acc,
                             std::vector<std::pair<i64, Rat>>& out);
};

// Accumulator for sums of many products: builds an exponent->coefficient
// map and canonicalizes once at the end.
class CycAccum {
public:
    explicit CycAccum(i64 m) : mod_(m) {}
    void add(const Cyc& x, const Rat& scale);
    void add_product(const Cyc& a, const Cyc& b, const Rat& scale);
    Cyc finalize() const;

private:
    i64 mod_;
    std::unordered_map<i64, Rat> acc_;
};

} // namespace modrep
