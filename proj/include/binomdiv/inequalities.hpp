#pragma once

#include "binomdiv/theorems.hpp"

#include <optional>
#include <string_view>

namespace binomdiv::ineq {

// Exact LHS - RHS of one floor inequality at one residue class, with the
// classification of whether this class is a known exception (defect -1).
struct DefectReport {
    i64 m{1};
    std::optional<i64> k_mod, l_mod, n_mod;
    i64 defect{0};
    bool exception_expected{false};
};

// floor(2kn/m) - floor(kn/m) + floor((k-1)n/m) - floor(2(k-1)n/m)
//   >= floor((n+1)/m) - floor((2k-1)/m) + floor((2k-2)/m);
// exception (defect -1): 2|m, k = m/2+1 and n = -1 (mod m). m >= 1.
DefectReport defect_2_1(i64 m, i64 k, i64 n);

// floor(2kn/m) + floor(n/m) + floor((k+1)/m)
//   >= floor(k/m) + floor(2n/m) + floor(kn/m) + floor(((k-1)n+1)/m);
// no exceptions. m >= 3 (invalid_argument below).
DefectReport defect_2_2(i64 m, i64 k, i64 n);

// floor((15n-1)/m) + floor(2/m) + floor(4n/m)
//   >= floor((12n+2)/m) + floor(2n/m) + floor((5n-1)/m);
// exception: 3|m and n = 2m/3 (mod m). m >= 2.
DefectReport defect_2_3_i(i64 m, i64 n);

// floor((15n-1)/m) + floor(2n/m)
//   >= floor((10n+1)/m) + floor(4n/m) + floor((3n-1)/m);
// exception: 5|m and n = 2m/5 or 4m/5 (mod m). m >= 2.
DefectReport defect_2_3_ii(i64 m, i64 n);

// floor((kn+ln)/m) - floor(kn/m) - floor((ln+1)/m) + floor(k/m)
//   - floor((k-1)/m) >= 0; no exceptions. m >= 1.
DefectReport defect_3_3(i64 m, i64 k, i64 l, i64 n);

// Part (i): {12x}+{5x}+{2x} >= {4x}+{15x}, exhaustively at x = j/60 (the
// defect is piecewise constant between sixtieths: the slopes cancel), with
// midpoint confirmation at x = (2j+1)/120. Part (ii): {5x} >= {2x} >= 1/2
// implies {5x} >= 2/3, at every rational j/m with m <= den_max. Exact
// rational arithmetic throughout.
theorems::Verdict check_lemma_2_1(i64 den_max);

enum class InequalityId { thm_2_1, thm_2_2, thm_2_3_i, thm_2_3_ii, lemma_3_3, lemma_2_1 };

// CLI spellings: 2.1, 2.2, 2.3i, 2.3ii, 3.3, L2.1.
InequalityId parse_inequality(std::string_view text);
std::string inequality_name(InequalityId id);

struct ScanSummary {
    i64 classes_scanned{0};
    i64 exception_classes{0};
    theorems::Verdict verdict;
};

// For every modulus m <= m_max and every residue tuple (soundness: each
// defect depends on its integer arguments only through their residues mod m),
// checks that the defect matches the exception classification: -1 on
// expected exceptions and >= 0 elsewhere. Residues iterate lexicographically
// and the first mismatch wins. lemma_2_1 delegates to check_lemma_2_1 with
// den_max = m_max.
ScanSummary exhaustive_scan(InequalityId id, i64 m_max, unsigned workers = 1);

} // namespace binomdiv::ineq
