#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binomdiv {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// base^exp with overflow detection; exp >= 0
inline i64 checked_pow(i64 base, i64 exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    i64 r = 1;
    while (exp > 0) {
        if (exp & 1) r = checked_mul(r, base);
        exp >>= 1;
        if (exp > 0) base = checked_mul(base, base);
    }
    return r;
}

// Floor division, b > 0. Rounds toward negative infinity.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    i64 r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

// Nonnegative remainder in [0, b), b > 0.
inline i64 mod_floor(i64 a, i64 b) {
    i64 r = a % b;
    return r < 0 ? r + b : r;
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// (a * b) mod m without overflow; m > 0, 0 <= a,b < m.
inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

// (base^exp) mod m; m > 0, exp >= 0.
inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    i64 r = 1 % m;
    base = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace binomdiv
