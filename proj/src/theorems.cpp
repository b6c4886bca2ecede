#include "binomdiv/theorems.hpp"

#include "binomdiv/factorial_ratio.hpp"
#include "binomdiv/valuation.hpp"

#include <algorithm>

namespace binomdiv::theorems {

using ratio::constant;
using ratio::FactorialRatioSpec;
using ratio::lin;

namespace {

using Params = std::vector<std::pair<std::string, i64>>;

Verdict failure(Params params, i64 prime, std::string note, std::string detail) {
    Verdict v;
    v.outcome = Outcome::fails;
    v.witness = Witness{std::move(params), prime, std::move(note)};
    v.detail = std::move(detail);
    return v;
}

Verdict holds(std::string detail) {
    Verdict v;
    v.detail = std::move(detail);
    return v;
}

// Divisibility plus (optionally) the parity biconditional of the quotient.
Verdict check_quotient(const FactorialRatioSpec& spec, i64 n, std::optional<bool> odd_expected,
                       const Params& params) {
    std::string text = to_text(spec);
    auto chk = ratio::is_integer_at(spec, n);
    if (!chk.integral)
        return failure(params, chk.violating_prime, "quotient is not an integer", text);
    if (odd_expected) {
        bool odd = ratio::nu_at(spec, n, 2) == 0;
        if (odd != *odd_expected)
            return failure(params, 2,
                           std::string("quotient is ") + (odd ? "odd" : "even") +
                               " but the power-of-two characterization predicts " +
                               (*odd_expected ? "odd" : "even"),
                           text);
    }
    return holds(text);
}

} // namespace

Verdict verify_1_1_i(i64 m, i64 n) {
    if (m < 0 || n < 1) throw std::invalid_argument("verify_1_1_i: need m >= 0, n >= 1");
    Params params{{"m", m}, {"n", n}};
    i64 m2 = checked_mul(2, m);

    auto first = FactorialRatioSpec{}
                     .binom(lin(2, 0), lin(1, 0), +1)
                     .binom(lin(2, m2), lin(2, 0), +1)
                     .linear(constant(2), -1)
                     .binom(lin(1, m), lin(1, 0), -1);
    Verdict v = check_quotient(first, n, valuation::is_power_of_two(n), params);
    if (!v.ok() || n == 1) return v;

    auto second = FactorialRatioSpec{}
                      .binom(lin(2, 0), lin(1, 0), +1)
                      .binom(lin(2, m2), lin(2, -1), +1)
                      .linear(constant(8), -1)
                      .binom(lin(1, m), lin(1, 0), -1);
    Verdict w = check_quotient(second, n, valuation::is_power_of_two(n - 1), params);
    w.detail = v.detail + "  and  " + w.detail;
    return w;
}

Verdict verify_1_1_ii(i64 k, i64 n) {
    if (k < 1 || n < 1) throw std::invalid_argument("verify_1_1_ii: need k, n >= 1");
    auto spec = FactorialRatioSpec{}
                    .binom(lin(2, 0), lin(1, 0), +1)
                    .binom(lin(checked_mul(2, k), 0), lin(2, 0), +1)
                    .linear(lin(checked_mul(2, k) - 2, 1), -1)
                    .linear(constant(2), -1)
                    .binom(lin(k, 0), lin(1, 0), -1);
    return check_quotient(spec, n, valuation::is_power_of_two(n), {{"k", k}, {"n", n}});
}

Verdict verify_1_2_i(i64 k, i64 n) {
    if (k < 1 || n < 1) throw std::invalid_argument("verify_1_2_i: need k, n >= 1");
    auto spec = FactorialRatioSpec{}
                    .linear(constant(checked_mul(2, k) - 1), +1)
                    .binom(lin(2, 0), lin(1, 0), +1)
                    .linear(lin(1, 1), -1)
                    .binom(lin(checked_mul(2, k), 0), lin(2, 0), +1)
                    .binom(lin(k, 0), lin(1, 0), -1);
    return check_quotient(spec, n, valuation::is_power_of_two(checked_add(n, 1)),
                          {{"k", k}, {"n", n}});
}

Verdict verify_1_2_ii(i64 k, i64 n) {
    if (k < 1 || n < 1) throw std::invalid_argument("verify_1_2_ii: need k, n >= 1");
    auto spec = FactorialRatioSpec{}
                    .linear(constant(valuation::odd_part(checked_add(k, 1))), +1)
                    .binom(lin(k, 0), lin(1, 0), +1)
                    .linear(lin(k - 1, 1), -1)
                    .binom(lin(checked_mul(2, k), 0), lin(k, 0), +1)
                    .binom(lin(2, 0), lin(1, 0), -1);
    i64 pow2_arg = checked_add(checked_mul(k - 1, n), 1);
    return check_quotient(spec, n, valuation::is_power_of_two(pow2_arg), {{"k", k}, {"n", n}});
}

Verdict verify_1_2_iii(i64 k, i64 n) {
    if (k < 1 || n < 1) throw std::invalid_argument("verify_1_2_iii: need k, n >= 1");
    i64 K = checked_add(checked_pow(2, k), -1);
    auto spec = FactorialRatioSpec{}
                    .binom(lin(checked_mul(2, K), 0), lin(K, 0), +1)
                    .binom(lin(K, 0), lin(1, 0), +1)
                    .linear(lin(K - 1, 1), -1)
                    .linear(constant(checked_pow(2, k - 1)), -1)
                    .binom(lin(2, 0), lin(1, 0), -1);
    return check_quotient(spec, n, std::nullopt, {{"k", k}, {"n", n}});
}

Verdict verify_1_3(i64 n) {
    if (n < 1) throw std::invalid_argument("verify_1_3: need n >= 1");
    Params params{{"n", n}};
    auto first = FactorialRatioSpec{}
                     .binom(lin(3, -1), lin(1, -1), +1)
                     .binom(lin(15, 0), lin(3, 0), +1)
                     .linear(lin(6, 1), -1)
                     .linear(lin(12, 1), -1)
                     .binom(lin(5, 0), lin(1, 0), -1);
    Verdict v = check_quotient(first, n, std::nullopt, params);
    if (!v.ok()) return v;

    auto second = FactorialRatioSpec{}
                      .binom(lin(5, -1), lin(1, -1), +1)
                      .binom(lin(15, 0), lin(5, 0), +1)
                      .linear(lin(10, 1), -1)
                      .binom(lin(3, 0), lin(1, 0), -1);
    Verdict w = check_quotient(second, n, std::nullopt, params);
    w.detail = v.detail + "  and  " + w.detail;
    return w;
}

Verdict verify_1_4(i64 k, i64 l, i64 n) {
    if (k < 1 || l < 1 || n < 1) throw std::invalid_argument("verify_1_4: need k, l, n >= 1");
    i64 ln1 = checked_add(checked_mul(l, n), 1);
    i64 d = ln1 / gcd_i64(k, ln1);
    i64 a = checked_add(checked_mul(k, n), checked_mul(l, n));
    i64 b = checked_mul(k, n);
    std::string detail = "(" + std::to_string(ln1) + "/gcd(" + std::to_string(k) + ", " +
                         std::to_string(ln1) + ")) = " + std::to_string(d) +
                         " divides C(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    Params params{{"k", k}, {"l", l}, {"n", n}};

    i64 rest = d;
    for (i64 p = 2; p * p <= rest; p == 2 ? p = 3 : p += 2) {
        if (rest % p != 0) continue;
        i64 e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (valuation::nu_binomial(a, b, p) < e)
            return failure(params, p, "prime power " + std::to_string(p) + "^" +
                                          std::to_string(e) + " does not divide the binomial",
                           detail);
    }
    if (rest > 1 && valuation::nu_binomial(a, b, rest) < 1)
        return failure(params, rest, "prime " + std::to_string(rest) +
                                         " does not divide the binomial", detail);
    return holds(detail);
}

Verdict verify_bober_family(i64 k, i64 l, i64 n_max) {
    if (k < 1 || l < 1 || n_max < 1)
        throw std::invalid_argument("verify_bober_family: need k, l, n_max >= 1");
    bool in_family = k == l || k <= 2 || l <= 2 ||
                     (std::min(k, l) == 3 && std::max(k, l) == 5);
    auto spec = FactorialRatioSpec{}
                    .fact(lin(checked_mul(k, l), 0), +1)
                    .fact(lin(k - 1, 0), +1)
                    .fact(lin(k, 0), -1)
                    .fact(lin(l - 1, 0), -1)
                    .fact(lin(checked_mul(k - 1, l), 0), -1);
    std::string text = to_text(spec);
    Params params{{"k", k}, {"l", l}};

    for (i64 n = 1; n <= n_max; ++n) {
        auto chk = ratio::is_integer_at(spec, n);
        if (chk.integral) continue;
        if (in_family)
            return failure(params, chk.violating_prime,
                           "classified-integral family is non-integral at n=" +
                               std::to_string(n),
                           text);
        return holds(text + "  non-integral as classified; least counterexample n=" +
                     std::to_string(n) + " (prime " + std::to_string(chk.violating_prime) +
                     ")");
    }
    if (in_family)
        return holds(text + "  integral for all n <= " + std::to_string(n_max) +
                     ", as classified");
    Verdict v;
    v.outcome = Outcome::inconclusive;
    v.detail = text + "  classified non-integral, but no counterexample found for n <= " +
               std::to_string(n_max);
    return v;
}

} // namespace binomdiv::theorems
