#include "binomdiv/conjectures.hpp"

#include "binomdiv/factorial_ratio.hpp"
#include "binomdiv/parallel.hpp"
#include "binomdiv/sequences.hpp"
#include "binomdiv/valuation.hpp"

#include <chrono>

namespace binomdiv::conj {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void deliver(ScanReport& report, const CounterexampleSink& sink, Counterexample ce) {
    if (sink) sink(ce);
    report.counterexamples.push_back(std::move(ce));
}

std::vector<i64> prime_factors(i64 v) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= v; d == 2 ? d = 3 : d += 2) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

} // namespace

ScanReport conj_1_1_scan(i64 m_max, i64 k_max, i64 n_max, unsigned workers,
                         const CounterexampleSink& sink) {
    if (m_max < 2 || k_max < 1 || n_max < 1)
        throw std::invalid_argument("conj_1_1_scan: need m_max >= 2, k_max >= 1, n_max >= 1");
    auto t0 = Clock::now();
    ScanReport report;
    report.conjecture = "1.1";
    report.ranges = {{"m_max", m_max}, {"k_max", k_max}, {"n_max", n_max}};

    struct Chunk {
        i64 cases{0};
        std::vector<Counterexample> found;
    };
    auto scan_m = [&](std::size_t idx) {
        i64 m = 2 + static_cast<i64>(idx);
        bool prime_m = valuation::is_prime(m);
        Chunk chunk;
        try {
            for (i64 k = 1; k <= k_max; ++k) {
                i64 q = checked_add(checked_pow(m, k), -1); // m^k - 1
                i64 r = q / (m - 1);                        // 1 + m + ... + m^{k-1}
                for (i64 n = 1; n <= n_max; ++n) {
                    ++chunk.cases;
                    bool sum_ok = valuation::digit_sum(checked_mul(q, n), m) >= k * (m - 1);
                    bool count_ok =
                        valuation::digits(checked_mul(r, n), m).nonzero_count() >= k;
                    if (sum_ok && count_ok) continue;
                    std::string note =
                        sum_ok ? "nonzero base-m digit count of n(m^k-1)/(m-1) below k"
                               : "base-m digit sum of (m^k-1)n below k(m-1)";
                    if (prime_m)
                        throw std::logic_error(
                            "conj_1_1_scan: violation at prime m=" + std::to_string(m) +
                            ", k=" + std::to_string(k) + ", n=" + std::to_string(n) + " (" +
                            note + ") — this case is a theorem, so the digit machinery "
                            "is broken");
                    chunk.found.push_back(
                        Counterexample{{{"m", m}, {"k", k}, {"n", n}}, note});
                }
            }
        } catch (const std::overflow_error&) {
            throw std::range_error(
                "conj_1_1_scan: (m^k-1)*n exceeds 64-bit range at m=" + std::to_string(m) +
                "; reduce m_max, k_max, or n_max");
        }
        return chunk;
    };

    ordered_parallel_map(static_cast<std::size_t>(m_max - 1), workers, scan_m,
                         [&](std::size_t, Chunk chunk) {
                             report.cases_checked += chunk.cases;
                             for (auto& ce : chunk.found)
                                 deliver(report, sink, std::move(ce));
                         });
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

theorems::Verdict conj_1_2_check(i64 n) {
    if (n < 1) throw std::invalid_argument("conj_1_2_check: n must be >= 1");
    i64 d = checked_add(checked_mul(10, n), 3);
    i64 t_mod = ratio::reconstruct_mod(seq::spec_t(), n, d);
    std::string detail = "t(" + std::to_string(n) + ") mod " + std::to_string(d) + " = " +
                         std::to_string(t_mod);

    auto fails_clause = [&](i64 factor, const std::string& clause) {
        theorems::Verdict v;
        v.outcome = theorems::Outcome::fails;
        v.witness = theorems::Witness{{{"n", n}},
                                      0,
                                      std::to_string(d) + " does not divide " + clause};
        v.detail = detail + "; " + std::to_string(factor) + "*t(n) mod " + std::to_string(d) +
                   " = " + std::to_string(mul_mod(factor % d, t_mod, d));
        return v;
    };

    if (mul_mod(21 % d, t_mod, d) != 0) return fails_clause(21, "21*t(n)");
    if (n % 3 != 0 && mul_mod(7 % d, t_mod, d) != 0) return fails_clause(7, "7*t(n)");
    if ((n + 1) % 7 != 0 && mul_mod(3 % d, t_mod, d) != 0) return fails_clause(3, "3*t(n)");

    theorems::Verdict v;
    v.detail = detail + "; all applicable clauses divide";
    return v;
}

ScanReport conj_1_2_scan(i64 n_max, unsigned workers, const CounterexampleSink& sink) {
    if (n_max < 1) throw std::invalid_argument("conj_1_2_scan: n_max must be >= 1");
    auto t0 = Clock::now();
    ScanReport report;
    report.conjecture = "1.2";
    report.ranges = {{"n_max", n_max}};

    ordered_parallel_map(
        static_cast<std::size_t>(n_max), workers,
        [&](std::size_t idx) { return conj_1_2_check(1 + static_cast<i64>(idx)); },
        [&](std::size_t idx, theorems::Verdict v) {
            ++report.cases_checked;
            if (!v.ok())
                deliver(report, sink,
                        Counterexample{{{"n", 1 + static_cast<i64>(idx)}},
                                       v.witness ? v.witness->note : v.detail});
        });
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

ScanReport conj_1_3_scan(i64 k_max, i64 l_max, i64 n_max, unsigned workers,
                         const CounterexampleSink& sink) {
    if (k_max < 2 || l_max < 2 || n_max < 1)
        throw std::invalid_argument("conj_1_3_scan: need k_max, l_max >= 2 and n_max >= 1");
    auto t0 = Clock::now();
    ScanReport report;
    report.conjecture = "1.3";
    report.ranges = {{"k_max", k_max}, {"l_max", l_max}, {"n_max", n_max}};

    using ratio::FactorialRatioSpec;
    using ratio::lin;

    struct PairOutcome {
        i64 k, l;
        // Least failing n per family, 0 = survived the whole range.
        i64 fail1{0}, fail2{0};
    };
    auto scan_pair = [&](std::size_t idx) {
        i64 k = 2 + static_cast<i64>(idx) / (l_max - 1);
        i64 l = 2 + static_cast<i64>(idx) % (l_max - 1);
        i64 kl = checked_mul(k, l);
        auto family1 = FactorialRatioSpec{} // C(ln,n) C(kln,ln-1) / C(kn,n)
                           .binom(lin(l, 0), lin(1, 0), +1)
                           .binom(lin(kl, 0), lin(l, -1), +1)
                           .binom(lin(k, 0), lin(1, 0), -1);
        auto family2 = FactorialRatioSpec{} // C(ln,n-1) C(kln,ln) / C(kn,n)
                           .binom(lin(l, 0), lin(1, -1), +1)
                           .binom(lin(kl, 0), lin(l, 0), +1)
                           .binom(lin(k, 0), lin(1, 0), -1);
        PairOutcome out{k, l, 0, 0};
        for (i64 n = 1; n <= n_max && out.fail1 == 0; ++n)
            if (!ratio::is_integer_at(family1, n).integral) out.fail1 = n;
        for (i64 n = 1; n <= n_max && out.fail2 == 0; ++n)
            if (!ratio::is_integer_at(family2, n).integral) out.fail2 = n;
        return out;
    };

    std::size_t pairs = static_cast<std::size_t>((k_max - 1) * (l_max - 1));
    ordered_parallel_map(
        pairs, workers, scan_pair, [&](std::size_t, PairOutcome out) {
            report.cases_checked += 2;
            bool in_family1 = out.k == out.l || out.l == 2 ||
                              (std::min(out.k, out.l) == 3 && std::max(out.k, out.l) == 5);
            bool in_family2 = out.k == 2 && valuation::is_power_of_two(out.l + 1);
            auto params = [&](i64 family) {
                return std::vector<std::pair<std::string, i64>>{
                    {"family", family}, {"k", out.k}, {"l", out.l}};
            };
            if (out.fail1 == 0 && !in_family1)
                deliver(report, sink,
                        Counterexample{params(1),
                                       "family-1 survivor outside the conjectured "
                                       "classification (counterexample candidate up to "
                                       "n_max)"});
            if (out.fail1 != 0 && in_family1)
                deliver(report, sink,
                        Counterexample{params(1),
                                       "conjectured family-1 member failed at n=" +
                                           std::to_string(out.fail1) +
                                           " (implementation alarm)"});
            if (out.fail2 == 0 && !in_family2)
                deliver(report, sink,
                        Counterexample{params(2),
                                       "family-2 survivor outside the conjectured "
                                       "classification (counterexample candidate up to "
                                       "n_max)"});
            if (out.fail2 != 0 && in_family2)
                deliver(report, sink,
                        Counterexample{params(2),
                                       "conjectured family-2 member failed at n=" +
                                           std::to_string(out.fail2) +
                                           " (implementation alarm)"});
        });
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

FSearchResult f_search(i64 k, i64 l, i64 cap) {
    if (k < 1 || l < 1) throw std::invalid_argument("f_search: k and l must be >= 1");
    if (cap < 1) throw std::invalid_argument("f_search: cap must be >= 1");

    bool all_divide = true;
    for (i64 p : prime_factors(k))
        if (l % p != 0) { all_divide = false; break; }
    if (all_divide) return {k, l, FSearchResult::Status::zero, 0, cap};

    for (i64 n = 1; n <= cap; ++n) {
        i64 d = checked_add(checked_mul(l, n), 1);
        i64 a = checked_add(checked_mul(k, n), checked_mul(l, n));
        i64 b = checked_mul(k, n);
        i64 rest = d;
        bool divides = true;
        for (i64 p = 2; p * p <= rest && divides; p == 2 ? p = 3 : p += 2) {
            if (rest % p != 0) continue;
            i64 e = 0;
            while (rest % p == 0) { rest /= p; ++e; }
            divides = valuation::nu_binomial(a, b, p) >= e;
        }
        if (divides && rest > 1) divides = valuation::nu_binomial(a, b, rest) >= 1;
        if (!divides) return {k, l, FSearchResult::Status::found, n, cap};
    }
    return {k, l, FSearchResult::Status::unknown, 0, cap};
}

std::vector<std::tuple<i64, i64, i64>> published_f_pairs() {
    return {
        {7, 36, 279},   {10, 192, 362}, {11, 100, 1187}, {13, 144, 2001},
        {22, 200, 6462}, {31, 171, 1765}, {43, 26, 640},  {53, 32, 790},
        {67, 56, 2004}, {73, 61, 2184}, {74, 62, 885},   {97, 81, 2904},
    };
}

std::vector<FSearchResult> f_table(i64 cap, unsigned workers) {
    if (cap < 1) throw std::invalid_argument("f_table: cap must be >= 1");
    auto pairs = published_f_pairs();
    auto results = parallel_map_collect(pairs.size(), workers, [&](std::size_t i) {
        auto [k, l, published] = pairs[i];
        return f_search(k, l, std::max(cap, published));
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [k, l, published] = pairs[i];
        const FSearchResult& r = results[i];
        if (r.status != FSearchResult::Status::found || r.n != published) {
            std::string got = r.status == FSearchResult::Status::found
                                  ? "found " + std::to_string(r.n)
                                  : (r.status == FSearchResult::Status::zero
                                         ? std::string("zero")
                                         : "unknown up to " + std::to_string(r.cap));
            throw std::runtime_error("f_table: recomputed f(" + std::to_string(k) + ", " +
                                     std::to_string(l) + ") = " + got +
                                     " but the published table says " +
                                     std::to_string(published));
        }
    }
    return results;
}

} // namespace binomdiv::conj
