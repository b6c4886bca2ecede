#pragma once

#include "binomdiv/checked.hpp"
#include "binomdiv/rational.hpp"

#include <utility>
#include <vector>

namespace binomdiv::valuation {

// Base-`base` expansion, little-endian. Empty for value 0; otherwise the last
// digit is nonzero.
struct DigitExpansion {
    i64 base{2};
    std::vector<i64> digits;

    i64 value() const;
    i64 nonzero_count() const;
};

struct Valuation {
    i64 prime{2};
    i64 exponent{0};
};

// Deterministic trial-division primality test. Inputs stay well below 2^32 at
// the scales this library targets, where this is fast.
bool is_prime(i64 p);

DigitExpansion digits(i64 n, i64 base);
i64 digit_sum(i64 n, i64 base);

// Exponent of p in n! by the floor-sum formula, cross-checked on every call
// against (n - digit_sum(n, p)) / (p - 1). A mismatch throws std::logic_error.
i64 nu_factorial(i64 n, i64 p);

// Exponent of p in C(a, b), 0 <= b <= a: carry count when adding b and a-b in
// base p, asserted equal to the factorial-valuation difference.
i64 nu_binomial(i64 a, i64 b, i64 p);

bool is_power_of_two(i64 n);
i64 odd_part(i64 n);

// Exponent of p in v, v >= 1.
i64 nu_integer(i64 v, i64 p);

// Evaluates both sides of digit_sum(n, p)/(p-1) = sum_{j>=1} {n/p^j} exactly
// and asserts their equality; returns the pair (lhs, rhs). The series has a
// geometric tail (terms n/p^j with p^j > n stay nonzero), summed in closed
// form as n / (p^J (p-1)) for the largest J with p^J <= n.
std::pair<Rational, Rational> fractional_part_sum_identity(i64 n, i64 p);

namespace detail {
// No primality re-check: for hot loops over sieve-certified primes.
i64 nu_factorial_certified(i64 n, i64 p);
i64 carries_in_addition(i64 x, i64 y, i64 p);
i64 nu_integer_certified(i64 v, i64 p);
} // namespace detail

} // namespace binomdiv::valuation
