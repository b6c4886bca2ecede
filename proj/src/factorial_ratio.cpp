#include "binomdiv/factorial_ratio.hpp"

#include "binomdiv/sieve.hpp"
#include "binomdiv/valuation.hpp"

#include <algorithm>
#include <set>

namespace binomdiv::ratio {

namespace {

void require_n(i64 n) {
    if (n < 1) throw std::invalid_argument("ratio: n must be >= 1, got " + std::to_string(n));
}

// Evaluated terms at a fixed n, with domain checks done once.
struct Evaluated {
    std::vector<std::pair<i64, int>> factorials; // (argument, sign)
    std::vector<std::pair<i64, int>> linears;    // (value, sign)
};

Evaluated evaluate_terms(const FactorialRatioSpec& spec, i64 n) {
    Evaluated ev;
    ev.factorials.reserve(spec.factorial_terms.size());
    ev.linears.reserve(spec.linear_terms.size());
    for (const auto& [form, sign] : spec.factorial_terms) {
        i64 a = form.eval(n);
        if (a < 0)
            throw std::domain_error("ratio: factorial argument (" + to_text(form) +
                                    ")! is negative at n=" + std::to_string(n));
        ev.factorials.emplace_back(a, sign);
    }
    for (const auto& [form, sign] : spec.linear_terms) {
        i64 v = form.eval(n);
        if (v <= 0)
            throw std::domain_error("ratio: linear factor [" + to_text(form) +
                                    "] is nonpositive at n=" + std::to_string(n));
        ev.linears.emplace_back(v, sign);
    }
    return ev;
}

i64 nu_of(const Evaluated& ev, i64 p) {
    i64 nu = 0;
    for (const auto& [a, sign] : ev.factorials)
        nu += sign * valuation::nu_factorial(a, p);
    for (const auto& [v, sign] : ev.linears)
        nu += sign * valuation::nu_integer(v, p);
    return nu;
}

// Largest factorial argument matching the sign filter (0 = any sign).
i64 max_factorial_arg(const Evaluated& ev, int sign_filter) {
    i64 bound = 0;
    for (const auto& [a, sign] : ev.factorials)
        if (sign_filter == 0 || sign == sign_filter) bound = std::max(bound, a);
    return bound;
}

void add_prime_factors(std::set<i64>& out, i64 v) {
    for (i64 d = 2; d * d <= v; d == 2 ? d = 3 : d += 2) {
        if (v % d == 0) {
            out.insert(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.insert(v);
}

// Primes that could appear in the profile (any sign), ascending.
std::vector<i64> candidate_primes(const Evaluated& ev, int sign_filter) {
    i64 bound = max_factorial_arg(ev, sign_filter);
    std::set<i64> extra;
    for (const auto& [v, sign] : ev.linears)
        if (sign_filter == 0 || sign == sign_filter)
            if (v > bound) add_prime_factors(extra, v);

    std::vector<i64> primes;
    if (bound >= 2) {
        auto sieved = primes_up_to(bound);
        for (i64 p : *sieved) {
            if (p > bound) break;
            primes.push_back(p);
        }
    }
    for (i64 p : extra)
        if (p > bound) primes.push_back(p); // set iteration is ascending
    return primes;
}

} // namespace

i64 nu_at(const FactorialRatioSpec& spec, i64 n, i64 p) {
    require_n(n);
    if (!valuation::is_prime(p))
        throw std::invalid_argument("ratio: nu_at requires a prime, got " + std::to_string(p));
    return nu_of(evaluate_terms(spec, n), p);
}

ValuationProfile profile(const FactorialRatioSpec& spec, i64 n) {
    require_n(n);
    Evaluated ev = evaluate_terms(spec, n);
    ValuationProfile out;
    for (i64 p : candidate_primes(ev, 0)) {
        i64 nu = nu_of(ev, p);
        if (nu != 0) out.entries.emplace_back(p, nu);
    }
    return out;
}

IntegralityCheck is_integer_at(const FactorialRatioSpec& spec, i64 n) {
    require_n(n);
    Evaluated ev = evaluate_terms(spec, n);
    // Only a denominator-side term can push an exponent negative, so only
    // primes visible to those terms need scanning. Ascending order makes the
    // first hit the least violating prime.
    for (i64 p : candidate_primes(ev, -1))
        if (nu_of(ev, p) < 0) return {false, p};
    return {true, 0};
}

mpz_class reconstruct(const FactorialRatioSpec& spec, i64 n) {
    require_n(n);
    ValuationProfile prof = profile(spec, n);
    for (const auto& [p, e] : prof.entries)
        if (e < 0)
            throw integrality_error(p, "ratio: value at n=" + std::to_string(n) +
                                           " is not an integer (prime " + std::to_string(p) +
                                           " has exponent " + std::to_string(e) + ")");
    mpz_class acc = 1;
    mpz_class pw;
    for (const auto& [p, e] : prof.entries) {
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
        acc *= pw;
    }
    return acc;
}

i64 reconstruct_mod(const FactorialRatioSpec& spec, i64 n, i64 m) {
    require_n(n);
    if (m < 2) throw std::invalid_argument("ratio: modulus must be >= 2, got " + std::to_string(m));
    Evaluated ev = evaluate_terms(spec, n);
    for (i64 p : candidate_primes(ev, -1))
        if (nu_of(ev, p) < 0)
            throw integrality_error(p, "ratio: value at n=" + std::to_string(n) +
                                           " is not an integer (prime " + std::to_string(p) +
                                           " divides the denominator)");
    i64 acc = 1 % m;
    for (i64 p : candidate_primes(ev, 0)) {
        i64 nu = nu_of(ev, p);
        if (nu > 0) acc = mul_mod(acc, pow_mod(p % m, nu, m), m);
    }
    return acc;
}

Parity parity(const FactorialRatioSpec& spec, i64 n) {
    require_n(n);
    Evaluated ev = evaluate_terms(spec, n);
    for (i64 p : candidate_primes(ev, -1))
        if (nu_of(ev, p) < 0)
            throw integrality_error(p, "ratio: parity undefined at n=" + std::to_string(n) +
                                           " (value is not an integer; prime " +
                                           std::to_string(p) + " divides the denominator)");
    return nu_of(ev, 2) > 0 ? Parity::even : Parity::odd;
}

} // namespace binomdiv::ratio
