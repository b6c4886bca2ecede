#include "binomdiv/valuation.hpp"

#include <stdexcept>
#include <string>

namespace binomdiv::valuation {

i64 DigitExpansion::value() const {
    i64 v = 0;
    i64 scale = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        v = checked_add(v, checked_mul(digits[i], scale));
        if (i + 1 < digits.size()) scale = checked_mul(scale, base);
    }
    return v;
}

i64 DigitExpansion::nonzero_count() const {
    i64 c = 0;
    for (i64 d : digits)
        if (d != 0) ++c;
    return c;
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

static void require_base(i64 base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2, got " + std::to_string(base));
}

static void require_prime(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("expected a prime, got " + std::to_string(p));
}

DigitExpansion digits(i64 n, i64 base) {
    require_base(base);
    if (n < 0) throw std::invalid_argument("digits: n must be nonnegative");
    DigitExpansion e;
    e.base = base;
    while (n > 0) {
        e.digits.push_back(n % base);
        n /= base;
    }
    return e;
}

i64 digit_sum(i64 n, i64 base) {
    require_base(base);
    if (n < 0) throw std::invalid_argument("digit_sum: n must be nonnegative");
    i64 s = 0;
    while (n > 0) {
        s += n % base;
        n /= base;
    }
    return s;
}

namespace detail {

i64 nu_factorial_certified(i64 n, i64 p) {
    // Floor-sum form; the sum terminates at the first power exceeding n.
    i64 floor_sum = 0;
    for (i64 q = p; q <= n; ) {
        floor_sum += n / q;
        if (q > n / p) break; // next power would overflow past n
        q *= p;
    }
    // Digit-sum form, recomputed on every call as a standing self-test.
    i64 ds = 0;
    for (i64 m = n; m > 0; m /= p) ds += m % p;
    i64 digit_form = (n - ds) / (p - 1);
    if (floor_sum != digit_form)
        throw std::logic_error("factorial valuation self-check failed at n=" + std::to_string(n) +
                               " p=" + std::to_string(p));
    return floor_sum;
}

i64 carries_in_addition(i64 x, i64 y, i64 p) {
    i64 carries = 0;
    i64 carry = 0;
    while (x > 0 || y > 0 || carry > 0) {
        i64 s = x % p + y % p + carry;
        carry = (s >= p) ? 1 : 0;
        carries += carry;
        x /= p;
        y /= p;
    }
    return carries;
}

i64 nu_integer_certified(i64 v, i64 p) {
    i64 e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

} // namespace detail

i64 nu_factorial(i64 n, i64 p) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("nu_factorial: n must be nonnegative");
    return detail::nu_factorial_certified(n, p);
}

i64 nu_binomial(i64 a, i64 b, i64 p) {
    require_prime(p);
    if (b < 0 || b > a)
        throw std::invalid_argument("nu_binomial: need 0 <= b <= a");
    i64 carries = detail::carries_in_addition(b, a - b, p);
    i64 legendre = detail::nu_factorial_certified(a, p) - detail::nu_factorial_certified(b, p) -
                   detail::nu_factorial_certified(a - b, p);
    if (carries != legendre)
        throw std::logic_error("carry count disagrees with factorial valuations at C(" +
                               std::to_string(a) + "," + std::to_string(b) + ") p=" + std::to_string(p));
    return carries;
}

bool is_power_of_two(i64 n) {
    if (n < 1) throw std::invalid_argument("is_power_of_two: n must be positive");
    return (n & (n - 1)) == 0;
}

i64 odd_part(i64 n) {
    if (n < 1) throw std::invalid_argument("odd_part: n must be positive");
    while ((n & 1) == 0) n >>= 1;
    return n;
}

i64 nu_integer(i64 v, i64 p) {
    require_prime(p);
    if (v < 1) throw std::invalid_argument("nu_integer: v must be positive");
    return detail::nu_integer_certified(v, p);
}

std::pair<Rational, Rational> fractional_part_sum_identity(i64 n, i64 p) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("fractional_part_sum_identity: n must be positive");

    Rational lhs(digit_sum(n, p), p - 1);

    Rational head(0);
    i64 q = 1; // largest power of p not exceeding n, built incrementally
    while (q <= n / p) {
        q *= p;
        head = head + Rational(n % q, q);
    }
    Rational tail(n, checked_mul(q, p - 1));
    Rational rhs = head + tail;

    if (lhs != rhs)
        throw std::logic_error("fractional-part sum identity failed at n=" + std::to_string(n) +
                               " p=" + std::to_string(p));
    return {lhs, rhs};
}

} // namespace binomdiv::valuation
