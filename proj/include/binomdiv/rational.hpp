#pragma once

#include "binomdiv/checked.hpp"

#include <string>

namespace binomdiv {

// Exact rational on 64-bit integers, always normalized: den > 0, gcd(|num|, den) = 1.
// Fractional-part arithmetic for the floor-inequality checks stays in tiny
// denominators, so no big-integer fallback is needed; overflow throws.
struct Rational {
    i64 num{0};
    i64 den{1};

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = gcd_i64(n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i64 g = gcd_i64(a.den, b.den);
        i64 bd = b.den / g;
        i64 n = checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g));
        return Rational(n, checked_mul(a.den, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Fractional part {a/m} as an exact rational; m > 0, a may be negative.
inline Rational frac_part(i64 a, i64 m) {
    return Rational(mod_floor(a, m), m);
}

} // namespace binomdiv
