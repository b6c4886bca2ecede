#pragma once

#include "binomdiv/checked.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binomdiv::ratio {

// coeff*n + offset
struct LinearForm {
    i64 coeff{0};
    i64 offset{0};

    i64 eval(i64 n) const { return checked_add(checked_mul(coeff, n), offset); }

    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
        return {a.coeff - b.coeff, a.offset - b.offset};
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeff == b.coeff && a.offset == b.offset;
    }
};

inline LinearForm lin(i64 coeff, i64 offset) { return {coeff, offset}; }
inline LinearForm constant(i64 c) { return {0, c}; }

// Signed symbolic product of factorials of linear forms and plain linear
// factors, parameterized by n. Evaluation is valuation-based throughout; the
// big integer behind a spec is only materialized on request.
struct FactorialRatioSpec {
    std::vector<std::pair<LinearForm, int>> factorial_terms; // sign in {+1, -1}
    std::vector<std::pair<LinearForm, int>> linear_terms;

    FactorialRatioSpec& fact(LinearForm f, int sign) {
        factorial_terms.emplace_back(f, sign);
        return *this;
    }
    FactorialRatioSpec& linear(LinearForm f, int sign) {
        linear_terms.emplace_back(f, sign);
        return *this;
    }
    // C(a, b) as three factorial terms with the given sign.
    FactorialRatioSpec& binom(LinearForm a, LinearForm b, int sign) {
        fact(a, sign);
        fact(b, -sign);
        fact(a - b, -sign);
        return *this;
    }
    // Concatenation: the product of two specs.
    FactorialRatioSpec& append(const FactorialRatioSpec& other) {
        factorial_terms.insert(factorial_terms.end(), other.factorial_terms.begin(),
                               other.factorial_terms.end());
        linear_terms.insert(linear_terms.end(), other.linear_terms.begin(),
                            other.linear_terms.end());
        return *this;
    }
};

// Sorted by prime, no zero exponents; exponents may be negative.
struct ValuationProfile {
    std::vector<std::pair<i64, i64>> entries;

    bool is_integral() const {
        for (const auto& [p, e] : entries)
            if (e < 0) return false;
        return true;
    }
};

class integrality_error : public std::domain_error {
public:
    integrality_error(i64 prime, const std::string& what)
        : std::domain_error(what), prime_(prime) {}
    i64 violating_prime() const { return prime_; }

private:
    i64 prime_;
};

struct IntegralityCheck {
    bool integral{true};
    i64 violating_prime{0}; // least prime with negative exponent when !integral
};

enum class Parity { even, odd };

// Signed valuation sum of the spec at (n, p); may be negative. Throws
// std::domain_error when a factorial argument is negative or a linear factor
// is nonpositive at this n.
i64 nu_at(const FactorialRatioSpec& spec, i64 n, i64 p);

// Full factorization of the value at n over every relevant prime.
ValuationProfile profile(const FactorialRatioSpec& spec, i64 n);

// Scans only primes that can carry a negative exponent (those bounded by the
// denominator-side terms), ascending, so the first hit is the least violator.
IntegralityCheck is_integer_at(const FactorialRatioSpec& spec, i64 n);

// Product p^e over the profile; equals the value of the ratio.
mpz_class reconstruct(const FactorialRatioSpec& spec, i64 n);

// reconstruct(spec, n) mod m without forming the big integer; m >= 2.
i64 reconstruct_mod(const FactorialRatioSpec& spec, i64 n, i64 m);

Parity parity(const FactorialRatioSpec& spec, i64 n);

// Canonical text form, e.g. "(15n-1)! (2)! (4n)! [6n+1] / (12n+2)! (2n)!".
// The grammar is documented in the README and round-trips through parse_spec.
std::string to_text(const FactorialRatioSpec& spec);
FactorialRatioSpec parse_spec(std::string_view text);
std::string to_text(const LinearForm& f);

} // namespace binomdiv::ratio
