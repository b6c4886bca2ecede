#pragma once

#include "binomdiv/checked.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binomdiv::theorems {

enum class Outcome { holds, fails, inconclusive };

struct Witness {
    std::vector<std::pair<std::string, i64>> params;
    i64 violating_prime{0}; // 0 when the failure is not tied to a single prime
    std::string note;
};

struct Verdict {
    Outcome outcome{Outcome::holds};
    std::optional<Witness> witness; // present iff outcome == fails
    std::string detail;             // the claim being checked, in ratio text form

    bool ok() const { return outcome == Outcome::holds; }
};

// Each verifier decides one divisibility/parity claim at a single parameter
// point, valuation-only on the success path (no big integers). Failures carry
// a witness; they are data, not exceptions.

// 2 C(m+n,n) | C(2n,n) C(2m+2n,2n), quotient odd iff n is a power of two;
// for n > 1 additionally 8 C(m+n,n) | C(2n,n) C(2m+2n,2n-1), quotient odd iff
// n-1 is a power of two. m >= 0, n >= 1.
Verdict verify_1_1_i(i64 m, i64 n);

// 2 C(kn,n) | C(2n,n) C((h+1)2n,2n)/(2hn+1) with h = k-1, quotient odd iff n
// is a power of two. k, n >= 1.
Verdict verify_1_1_ii(i64 k, i64 n);

// C(kn,n) | (2k-1) C(2n,n)/(n+1) C(2kn,2n), quotient odd iff n+1 is a power
// of two. k, n >= 1.
Verdict verify_1_2_i(i64 k, i64 n);

// C(2n,n) | odd_part(k+1) C(kn,n)/((k-1)n+1) C(2kn,kn), quotient odd iff
// (k-1)n+1 is a power of two. k, n >= 1.
Verdict verify_1_2_ii(i64 k, i64 n);

// 2^{k-1} C(2n,n) | C(2Kn,Kn) C(Kn,n)/((K-1)n+1) with K = 2^k - 1. k, n >= 1.
Verdict verify_1_2_iii(i64 k, i64 n);

// (6n+1) C(5n,n) | C(3n-1,n-1) C(15n,3n)/(12n+1)  and
// C(3n,n) | C(5n-1,n-1) C(15n,5n)/(10n+1). n >= 1.
Verdict verify_1_3(i64 n);

// (ln+1)/gcd(k, ln+1) divides C(kn+ln, kn), decided prime-by-prime via carry
// counting. k, l, n >= 1.
Verdict verify_1_4(i64 k, i64 l, i64 n);

// Classification of when C(ln,n) C(kln,ln)/C(kn,n) is integral for every n:
// exactly when k = l, or {k,l} intersects {1,2}, or {k,l} = {3,5}. For a pair
// inside the classification, checks integrality for all n <= n_max; outside
// it, searches for the least non-integral n <= n_max (holds when found,
// inconclusive when not).
Verdict verify_bober_family(i64 k, i64 l, i64 n_max);

} // namespace binomdiv::theorems
