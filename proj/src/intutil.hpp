#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modrep {

using i64 = long long;
using i128 = __int128;

inline i64 narrow128(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return static_cast<i64>(v);
}

inline i64 mul_checked(i64 a, i64 b) { return narrow128(i128(a) * i128(b)); }
inline i64 add_checked(i64 a, i64 b) { return narrow128(i128(a) + i128(b)); }

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(num,den) = 1).  Intermediate products go through __int128.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        i64 g = std::gcd(a.den, b.den);
        i128 n = i128(a.num) * (b.den / g) + i128(b.num) * (a.den / g);
        i128 d = i128(a.den / g) * b.den;
        Rat r;
        // reduce in 128 bits before narrowing
        i128 nn = n < 0 ? -n : n;
        i128 gg = d;
        while (nn) { i128 t = gg % nn; gg = nn; nn = t; }
        if (gg > 1) { n /= gg; d /= gg; }
        r.num = narrow128(n);
        r.den = narrow128(d);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    friend Rat operator-(const Rat& a) { Rat r; r.num = -a.num; r.den = a.den; return r; }
    friend Rat operator*(const Rat& a, const Rat& b) {
        i64 g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        i64 g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        Rat r;
        r.num = mul_checked(a.num / g1, b.num / g2);
        r.den = mul_checked(a.den / g2, b.den / g1);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("division by zero rational");
        return a * Rat(b.den, b.num);
    }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat abs(const Rat& a) { return a.num < 0 ? -a : a; }

// floor(a/b) for integers, correct for negative a
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 mod_pos(i64 a, i64 b) {
    i64 r = a % b;
    return r < 0 ? r + b : r;
}

// fractional part of a rational, in [0,1)
inline Rat frac_part(const Rat& a) {
    i64 f = floor_div(a.num, a.den);
    return a - Rat(f);
}

} // namespace modrep
