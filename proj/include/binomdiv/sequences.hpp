#pragma once

#include "binomdiv/factorial_ratio.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace binomdiv::seq {

// One of: catalan, catalan:h, s, t, S:k, Q:m (the CLI spellings).
struct SequenceId {
    enum class Kind { catalan, catalan_order, s, t, S, Q };
    Kind kind{Kind::catalan};
    i64 param{0}; // h for catalan:h, k for S:k, m for Q:m

    static SequenceId parse(std::string_view text);
    std::string name() const;
};

// Exact C(a, b) via GMP; 0 when b < 0 or b > a. a >= 0 required.
mpz_class binomial_exact(i64 a, i64 b);

// The defining ratios, as specs in the variable n.
ratio::FactorialRatioSpec spec_catalan();
ratio::FactorialRatioSpec spec_catalan_order(i64 h); // h >= 0
ratio::FactorialRatioSpec spec_s();
ratio::FactorialRatioSpec spec_t();
ratio::FactorialRatioSpec spec_S(i64 k); // k >= 1
ratio::FactorialRatioSpec spec_Q(i64 m); // m >= 0
ratio::FactorialRatioSpec spec_for(const SequenceId& id);

// Values are produced through valuation-profile reconstruction and then
// cross-checked against an independent identity where one exists; a mismatch
// or an unexpected non-integral value throws std::logic_error.
mpz_class catalan(i64 n);              // n >= 0
mpz_class catalan_order(i64 h, i64 n); // h, n >= 0
mpz_class seq_s(i64 n);                // n >= 1
mpz_class seq_t(i64 n);                // n >= 1
mpz_class seq_S(i64 k, i64 n);         // k >= 1, n >= 1
mpz_class seq_Q(i64 m, i64 n);         // m >= 0, n >= 1

mpz_class value(const SequenceId& id, i64 n);
void stream(const SequenceId& id, i64 n_max,
            const std::function<void(i64, const mpz_class&)>& emit);

} // namespace binomdiv::seq
