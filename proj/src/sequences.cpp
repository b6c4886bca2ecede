#include "binomdiv/sequences.hpp"

#include <charconv>

namespace binomdiv::seq {

using ratio::constant;
using ratio::FactorialRatioSpec;
using ratio::lin;

namespace {

i64 parse_param(std::string_view s, const char* what) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument(std::string("sequence: bad ") + what + " parameter '" +
                                    std::string(s) + "'");
    return v;
}

mpz_class reconstruct_fatal(const FactorialRatioSpec& spec, i64 n, const char* name) {
    // Integrality of every named sequence is a proven fact; a violation here
    // means the valuation engine is broken, not that the input was bad.
    try {
        return ratio::reconstruct(spec, n);
    } catch (const ratio::integrality_error& e) {
        throw std::logic_error(std::string(name) + ": expected-integral value failed: " +
                               e.what());
    }
}

void check(bool ok, const char* name, i64 n, const char* what) {
    if (!ok)
        throw std::logic_error(std::string(name) + " at n=" + std::to_string(n) +
                               ": identity cross-check failed (" + what + ")");
}

} // namespace

SequenceId SequenceId::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    if (colon == std::string_view::npos) {
        if (head == "catalan") return {Kind::catalan, 0};
        if (head == "s") return {Kind::s, 0};
        if (head == "t") return {Kind::t, 0};
    } else {
        std::string_view tail = text.substr(colon + 1);
        if (head == "catalan") {
            i64 h = parse_param(tail, "catalan order");
            if (h < 0) throw std::invalid_argument("sequence: catalan order must be >= 0");
            return {Kind::catalan_order, h};
        }
        if (head == "S") {
            i64 k = parse_param(tail, "S");
            if (k < 1) throw std::invalid_argument("sequence: S parameter must be >= 1");
            return {Kind::S, k};
        }
        if (head == "Q") {
            i64 m = parse_param(tail, "Q");
            if (m < 0) throw std::invalid_argument("sequence: Q parameter must be >= 0");
            return {Kind::Q, m};
        }
    }
    throw std::invalid_argument("sequence: unknown sequence '" + std::string(text) +
                                "' (expected catalan, catalan:h, s, t, S:k, or Q:m)");
}

std::string SequenceId::name() const {
    switch (kind) {
        case Kind::catalan: return "catalan";
        case Kind::catalan_order: return "catalan:" + std::to_string(param);
        case Kind::s: return "s";
        case Kind::t: return "t";
        case Kind::S: return "S:" + std::to_string(param);
        case Kind::Q: return "Q:" + std::to_string(param);
    }
    throw std::logic_error("sequence: corrupt SequenceId");
}

mpz_class binomial_exact(i64 a, i64 b) {
    if (a < 0) throw std::invalid_argument("binomial_exact: a must be >= 0");
    if (b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

FactorialRatioSpec spec_catalan() {
    // C(2n,n) / (n+1)
    return FactorialRatioSpec{}.binom(lin(2, 0), lin(1, 0), +1).linear(lin(1, 1), -1);
}

FactorialRatioSpec spec_catalan_order(i64 h) {
    if (h < 0) throw std::invalid_argument("spec_catalan_order: order must be >= 0");
    // C((h+1)n, n) / (hn+1)
    return FactorialRatioSpec{}
        .binom(lin(checked_add(h, 1), 0), lin(1, 0), +1)
        .linear(lin(h, 1), -1);
}

FactorialRatioSpec spec_s() {
    // C(3n-1, n-1) C(15n, 3n) / ((6n+1)(12n+1) C(5n, n))
    return FactorialRatioSpec{}
        .binom(lin(3, -1), lin(1, -1), +1)
        .binom(lin(15, 0), lin(3, 0), +1)
        .linear(lin(6, 1), -1)
        .linear(lin(12, 1), -1)
        .binom(lin(5, 0), lin(1, 0), -1);
}

FactorialRatioSpec spec_t() {
    // C(5n-1, n-1) C(15n, 5n) / ((10n+1) C(3n, n))
    return FactorialRatioSpec{}
        .binom(lin(5, -1), lin(1, -1), +1)
        .binom(lin(15, 0), lin(5, 0), +1)
        .linear(lin(10, 1), -1)
        .binom(lin(3, 0), lin(1, 0), -1);
}

FactorialRatioSpec spec_S(i64 k) {
    if (k < 1) throw std::invalid_argument("spec_S: parameter must be >= 1");
    i64 K = checked_add(checked_pow(2, k), -1);
    // C(2Kn, Kn) C(Kn, n) / (2^{k-1} ((K-1)n+1) C(2n, n)),  K = 2^k - 1
    return FactorialRatioSpec{}
        .binom(lin(checked_mul(2, K), 0), lin(K, 0), +1)
        .binom(lin(K, 0), lin(1, 0), +1)
        .linear(constant(checked_pow(2, k - 1)), -1)
        .linear(lin(K - 1, 1), -1)
        .binom(lin(2, 0), lin(1, 0), -1);
}

FactorialRatioSpec spec_Q(i64 m) {
    if (m < 0) throw std::invalid_argument("spec_Q: parameter must be >= 0");
    // C(2n, n) C(2m+2n, 2n) / (2 C(m+n, n))
    return FactorialRatioSpec{}
        .binom(lin(2, 0), lin(1, 0), +1)
        .binom(lin(2, checked_mul(2, m)), lin(2, 0), +1)
        .linear(constant(2), -1)
        .binom(lin(1, m), lin(1, 0), -1);
}

FactorialRatioSpec spec_for(const SequenceId& id) {
    switch (id.kind) {
        case SequenceId::Kind::catalan: return spec_catalan();
        case SequenceId::Kind::catalan_order: return spec_catalan_order(id.param);
        case SequenceId::Kind::s: return spec_s();
        case SequenceId::Kind::t: return spec_t();
        case SequenceId::Kind::S: return spec_S(id.param);
        case SequenceId::Kind::Q: return spec_Q(id.param);
    }
    throw std::logic_error("sequence: corrupt SequenceId");
}

mpz_class catalan(i64 n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    if (n == 0) return 1;
    mpz_class v = reconstruct_fatal(spec_catalan(), n, "catalan");
    check(v == binomial_exact(2 * n, n) - binomial_exact(2 * n, n - 1), "catalan", n,
          "C(2n,n) - C(2n,n-1)");
    return v;
}

mpz_class catalan_order(i64 h, i64 n) {
    if (h < 0 || n < 0) throw std::invalid_argument("catalan_order: h and n must be >= 0");
    if (n == 0) return 1;
    mpz_class v = reconstruct_fatal(spec_catalan_order(h), n, "catalan_order");
    i64 a = checked_mul(checked_add(h, 1), n);
    check(v == binomial_exact(a, n) - h * binomial_exact(a, n - 1), "catalan_order", n,
          "C((h+1)n,n) - h*C((h+1)n,n-1)");
    check(n * v == binomial_exact(a, n - 1), "catalan_order", n, "n*value = C((h+1)n,n-1)");
    return v;
}

mpz_class seq_s(i64 n) {
    if (n < 1) throw std::invalid_argument("seq_s: n must be >= 1");
    return reconstruct_fatal(spec_s(), n, "seq_s");
}

mpz_class seq_t(i64 n) {
    if (n < 1) throw std::invalid_argument("seq_t: n must be >= 1");
    return reconstruct_fatal(spec_t(), n, "seq_t");
}

mpz_class seq_S(i64 k, i64 n) {
    if (k < 1 || n < 1) throw std::invalid_argument("seq_S: k and n must be >= 1");
    mpz_class v = reconstruct_fatal(spec_S(k), n, "seq_S");
    // Re-expansion through the independently checked catalan_order path:
    // value * 2^{k-1} * C(2n,n) = C(2Kn, Kn) * catalan_order(K-1, n).
    i64 K = checked_add(checked_pow(2, k), -1);
    mpz_class lhs = v * binomial_exact(2 * n, n);
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1));
    check(lhs == binomial_exact(checked_mul(2 * K, n), checked_mul(K, n)) *
                     catalan_order(K - 1, n),
          "seq_S", n, "2^{k-1} C(2n,n) value = C(2Kn,Kn) C_n^{(K-1)}");
    return v;
}

mpz_class seq_Q(i64 m, i64 n) {
    if (m < 0) throw std::invalid_argument("seq_Q: m must be >= 0");
    if (n < 1) throw std::invalid_argument("seq_Q: n must be >= 1");
    mpz_class v = reconstruct_fatal(spec_Q(m), n, "seq_Q");
    // Closed form: n! * value = 2^{n-1} * prod_{j=1..n} (2m+2j-1).
    mpz_class rhs = 1;
    for (i64 j = 1; j <= n; ++j)
        rhs *= checked_add(checked_mul(2, checked_add(m, j)), -1);
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    check(fact * v == rhs, "seq_Q", n, "n! value = 2^{n-1} prod(2m+2j-1)");
    return v;
}

mpz_class value(const SequenceId& id, i64 n) {
    switch (id.kind) {
        case SequenceId::Kind::catalan: return catalan(n);
        case SequenceId::Kind::catalan_order: return catalan_order(id.param, n);
        case SequenceId::Kind::s: return seq_s(n);
        case SequenceId::Kind::t: return seq_t(n);
        case SequenceId::Kind::S: return seq_S(id.param, n);
        case SequenceId::Kind::Q: return seq_Q(id.param, n);
    }
    throw std::logic_error("sequence: corrupt SequenceId");
}

void stream(const SequenceId& id, i64 n_max,
            const std::function<void(i64, const mpz_class&)>& emit) {
    if (n_max < 1) throw std::invalid_argument("sequence stream: max must be >= 1");
    for (i64 n = 1; n <= n_max; ++n) emit(n, value(id, n));
}

} // namespace binomdiv::seq
