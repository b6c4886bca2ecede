#pragma once

#include "binomdiv/theorems.hpp"

#include <functional>
#include <tuple>
#include <vector>

namespace binomdiv::conj {

struct FSearchResult {
    enum class Status { zero, found, unknown };
    i64 k{1};
    i64 l{1};
    Status status{Status::unknown};
    i64 n{0};   // least violating n when status == found, else 0
    i64 cap{0}; // the scan bound (meaningful for unknown)
};

struct Counterexample {
    std::vector<std::pair<std::string, i64>> params;
    std::string note;
};

struct ScanReport {
    std::string conjecture; // "1.1", "1.2", "1.3"
    std::vector<std::pair<std::string, i64>> ranges;
    i64 cases_checked{0};
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds{0.0};

    bool survived() const { return counterexamples.empty(); }
};

// Called for each counterexample as soon as it is confirmed, in deterministic
// (canonical) order regardless of worker count.
using CounterexampleSink = std::function<void(const Counterexample&)>;

// Digit-sum scan: for 2 <= m <= m_max, 1 <= k <= k_max, 1 <= n <= n_max,
// checks digit_sum((m^k-1)n, m) >= k(m-1) and that (m^k-1)/(m-1)*n has at
// least k nonzero base-m digits. Both claims are theorems for prime m, so a
// prime-m violation throws std::logic_error (implementation bug); composite-m
// violations are reported. Bounds that overflow 64-bit arithmetic throw
// std::range_error.
ScanReport conj_1_1_scan(i64 m_max, i64 k_max, i64 n_max, unsigned workers = 1,
                         const CounterexampleSink& sink = {});

// 21*t(n) = 0 (mod 10n+3); if 3 does not divide n also 7*t(n) = 0; if 7 does
// not divide n+1 also 3*t(n) = 0. Decided via modular reconstruction.
theorems::Verdict conj_1_2_check(i64 n);
ScanReport conj_1_2_scan(i64 n_max, unsigned workers = 1,
                         const CounterexampleSink& sink = {});

// Divisibility families over 2 <= k <= k_max, 2 <= l <= l_max:
//   family 1: C(kn,n) | C(ln,n) C(kln,ln-1) for all n <= n_max,
//   family 2: C(kn,n) | C(ln,n-1) C(kln,ln) for all n <= n_max.
// Survivors are compared against the conjectured classifications
// (family 1: k=l, or l=2, or {k,l}={3,5}; family 2: k=2 and l+1 a power of
// two). Survivors outside the classification and classified members that
// failed are both reported.
ScanReport conj_1_3_scan(i64 k_max, i64 l_max, i64 n_max, unsigned workers = 1,
                         const CounterexampleSink& sink = {});

// Least n <= cap with (ln+1) not dividing C(kn+ln, kn), deciding each n by
// trial-factoring ln+1 and carry-counting. Status zero is returned only
// under the proven sufficient condition (every prime factor of k divides l);
// otherwise an exhausted scan is unknown, never zero.
FSearchResult f_search(i64 k, i64 l, i64 cap);

// The twelve published (k, l, f) table entries.
std::vector<std::tuple<i64, i64, i64>> published_f_pairs();

// Recomputes every published pair (raising the cap to the published value
// where that exceeds `cap`, so the table stays reachable) and returns the
// results; throws std::runtime_error naming the first differing pair on any
// mismatch with the published values.
std::vector<FSearchResult> f_table(i64 cap = 5000, unsigned workers = 1);

} // namespace binomdiv::conj
