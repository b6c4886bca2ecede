#include "binomdiv/inequalities.hpp"

#include "binomdiv/parallel.hpp"
#include "binomdiv/rational.hpp"

#include <string>

namespace binomdiv::ineq {

namespace {

// floor((a*b + c)/m) with overflow checks; the scans keep everything tiny but
// the public defect functions accept arbitrary integers.
i64 fd(i64 num, i64 m) { return floor_div(num, m); }

} // namespace

DefectReport defect_2_1(i64 m, i64 k, i64 n) {
    if (m < 1) throw std::invalid_argument("defect_2_1: m must be >= 1");
    i64 kn = checked_mul(k, n);
    i64 k1n = checked_mul(k - 1, n);
    i64 lhs = fd(checked_mul(2, kn), m) - fd(kn, m) + fd(k1n, m) - fd(checked_mul(2, k1n), m);
    i64 rhs = fd(checked_add(n, 1), m) - fd(checked_mul(2, k) - 1, m) +
              fd(checked_mul(2, k) - 2, m);
    bool exc = m % 2 == 0 && mod_floor(k - (m / 2 + 1), m) == 0 && mod_floor(n + 1, m) == 0;
    return {m, mod_floor(k, m), std::nullopt, mod_floor(n, m), lhs - rhs, exc};
}

DefectReport defect_2_2(i64 m, i64 k, i64 n) {
    if (m <= 2) throw std::invalid_argument("defect_2_2: m must be > 2");
    i64 kn = checked_mul(k, n);
    i64 lhs = fd(checked_mul(2, kn), m) + fd(n, m) + fd(checked_add(k, 1), m);
    i64 rhs = fd(k, m) + fd(checked_mul(2, n), m) + fd(kn, m) +
              fd(checked_add(checked_mul(k - 1, n), 1), m);
    return {m, mod_floor(k, m), std::nullopt, mod_floor(n, m), lhs - rhs, false};
}

DefectReport defect_2_3_i(i64 m, i64 n) {
    if (m < 2) throw std::invalid_argument("defect_2_3_i: m must be > 1");
    i64 lhs = fd(checked_mul(15, n) - 1, m) + fd(2, m) + fd(checked_mul(4, n), m);
    i64 rhs = fd(checked_add(checked_mul(12, n), 2), m) + fd(checked_mul(2, n), m) +
              fd(checked_mul(5, n) - 1, m);
    bool exc = m % 3 == 0 && mod_floor(n - 2 * (m / 3), m) == 0;
    return {m, std::nullopt, std::nullopt, mod_floor(n, m), lhs - rhs, exc};
}

DefectReport defect_2_3_ii(i64 m, i64 n) {
    if (m < 2) throw std::invalid_argument("defect_2_3_ii: m must be > 1");
    i64 lhs = fd(checked_mul(15, n) - 1, m) + fd(checked_mul(2, n), m);
    i64 rhs = fd(checked_add(checked_mul(10, n), 1), m) + fd(checked_mul(4, n), m) +
              fd(checked_mul(3, n) - 1, m);
    bool exc = m % 5 == 0 && (mod_floor(n - 2 * (m / 5), m) == 0 ||
                              mod_floor(n - 4 * (m / 5), m) == 0);
    return {m, std::nullopt, std::nullopt, mod_floor(n, m), lhs - rhs, exc};
}

DefectReport defect_3_3(i64 m, i64 k, i64 l, i64 n) {
    if (m < 1) throw std::invalid_argument("defect_3_3: m must be >= 1");
    i64 kn = checked_mul(k, n);
    i64 ln = checked_mul(l, n);
    i64 defect = fd(checked_add(kn, ln), m) - fd(kn, m) - fd(checked_add(ln, 1), m) +
                 fd(k, m) - fd(k - 1, m);
    return {m, mod_floor(k, m), mod_floor(l, m), mod_floor(n, m), defect, false};
}

theorems::Verdict check_lemma_2_1(i64 den_max) {
    if (den_max < 1) throw std::invalid_argument("check_lemma_2_1: den_max must be >= 1");

    auto part_i_defect = [](i64 j, i64 den) {
        return frac_part(12 * j, den) + frac_part(5 * j, den) + frac_part(2 * j, den) -
               frac_part(4 * j, den) - frac_part(15 * j, den);
    };
    for (i64 j = 0; j < 60; ++j) {
        Rational at_cell = part_i_defect(j, 60);
        Rational at_mid = part_i_defect(2 * j + 1, 120);
        if (at_cell < Rational(0) || at_cell != at_mid) {
            theorems::Verdict v;
            v.outcome = theorems::Outcome::fails;
            v.witness = theorems::Witness{
                {{"j", j}},
                0,
                at_cell < Rational(0)
                    ? "{12x}+{5x}+{2x}-{4x}-{15x} = " + at_cell.str() + " < 0 at x = " +
                          std::to_string(j) + "/60"
                    : "defect not constant on cell: " + at_cell.str() + " at " +
                          std::to_string(j) + "/60 vs " + at_mid.str() + " at midpoint"};
            v.detail = "{12x}+{5x}+{2x} >= {4x}+{15x} on sixtieth cells";
            return v;
        }
    }

    i64 hypothesis_cases = 0;
    for (i64 m = 1; m <= den_max; ++m) {
        for (i64 j = 0; j < m; ++j) {
            Rational f5 = frac_part(5 * j, m);
            Rational f2 = frac_part(2 * j, m);
            if (!(f5 >= f2 && f2 >= Rational(1, 2))) continue;
            ++hypothesis_cases;
            if (f5 < Rational(2, 3)) {
                theorems::Verdict v;
                v.outcome = theorems::Outcome::fails;
                v.witness = theorems::Witness{
                    {{"j", j}, {"m", m}},
                    0,
                    "{5x} = " + f5.str() + " < 2/3 at x = " + std::to_string(j) + "/" +
                        std::to_string(m) + " despite {5x} >= {2x} >= 1/2"};
                v.detail = "{5x} >= {2x} >= 1/2 implies {5x} >= 2/3";
                return v;
            }
        }
    }

    theorems::Verdict v;
    v.detail = "floor-free inequality {12x}+{5x}+{2x} >= {4x}+{15x}: 60 cells + midpoints; "
               "implication {5x} >= {2x} >= 1/2 -> {5x} >= 2/3: " +
               std::to_string(hypothesis_cases) + " hypothesis-satisfying rationals with "
               "denominator <= " +
               std::to_string(den_max);
    return v;
}

InequalityId parse_inequality(std::string_view text) {
    if (text == "2.1") return InequalityId::thm_2_1;
    if (text == "2.2") return InequalityId::thm_2_2;
    if (text == "2.3i") return InequalityId::thm_2_3_i;
    if (text == "2.3ii") return InequalityId::thm_2_3_ii;
    if (text == "3.3") return InequalityId::lemma_3_3;
    if (text == "L2.1") return InequalityId::lemma_2_1;
    throw std::invalid_argument("inequality: unknown id '" + std::string(text) +
                                "' (expected 2.1, 2.2, 2.3i, 2.3ii, 3.3, or L2.1)");
}

std::string inequality_name(InequalityId id) {
    switch (id) {
        case InequalityId::thm_2_1: return "2.1";
        case InequalityId::thm_2_2: return "2.2";
        case InequalityId::thm_2_3_i: return "2.3i";
        case InequalityId::thm_2_3_ii: return "2.3ii";
        case InequalityId::lemma_3_3: return "3.3";
        case InequalityId::lemma_2_1: return "L2.1";
    }
    throw std::logic_error("inequality: corrupt InequalityId");
}

namespace {

struct ChunkResult {
    i64 classes{0};
    i64 exceptions{0};
    std::optional<theorems::Witness> mismatch; // first in lexicographic order
};

void account(ChunkResult& acc, const DefectReport& r,
             std::vector<std::pair<std::string, i64>> params) {
    ++acc.classes;
    if (r.exception_expected) ++acc.exceptions;
    if (acc.mismatch) return;
    bool ok = r.exception_expected ? r.defect == -1 : r.defect >= 0;
    if (!ok)
        acc.mismatch = theorems::Witness{
            std::move(params), 0,
            "defect " + std::to_string(r.defect) +
                (r.exception_expected ? " on an expected exception class (want -1)"
                                      : " on a non-exception class (want >= 0)")};
}

ChunkResult scan_modulus(InequalityId id, i64 m) {
    ChunkResult acc;
    switch (id) {
        case InequalityId::thm_2_1:
            for (i64 k = 0; k < m && !acc.mismatch; ++k)
                for (i64 n = 0; n < m; ++n)
                    account(acc, defect_2_1(m, k, n), {{"m", m}, {"k", k}, {"n", n}});
            break;
        case InequalityId::thm_2_2:
            for (i64 k = 0; k < m && !acc.mismatch; ++k)
                for (i64 n = 0; n < m; ++n)
                    account(acc, defect_2_2(m, k, n), {{"m", m}, {"k", k}, {"n", n}});
            break;
        case InequalityId::thm_2_3_i:
            for (i64 n = 0; n < m; ++n)
                account(acc, defect_2_3_i(m, n), {{"m", m}, {"n", n}});
            break;
        case InequalityId::thm_2_3_ii:
            for (i64 n = 0; n < m; ++n)
                account(acc, defect_2_3_ii(m, n), {{"m", m}, {"n", n}});
            break;
        case InequalityId::lemma_3_3:
            for (i64 k = 0; k < m && !acc.mismatch; ++k)
                for (i64 l = 0; l < m && !acc.mismatch; ++l)
                    for (i64 n = 0; n < m; ++n)
                        account(acc, defect_3_3(m, k, l, n),
                                {{"m", m}, {"k", k}, {"l", l}, {"n", n}});
            break;
        case InequalityId::lemma_2_1:
            throw std::logic_error("scan_modulus: lemma_2_1 is handled separately");
    }
    return acc;
}

} // namespace

ScanSummary exhaustive_scan(InequalityId id, i64 m_max, unsigned workers) {
    if (m_max < 1) throw std::invalid_argument("exhaustive_scan: m_max must be >= 1");

    ScanSummary out;
    if (id == InequalityId::lemma_2_1) {
        out.verdict = check_lemma_2_1(m_max);
        // 60 cells + 60 midpoints, plus every rational with denominator <= m_max.
        out.classes_scanned = 120 + m_max * (m_max + 1) / 2;
        return out;
    }

    i64 m_lo = id == InequalityId::thm_2_2 ? 3 : (id == InequalityId::thm_2_3_i ||
                                                  id == InequalityId::thm_2_3_ii)
                                                     ? 2
                                                     : 1;
    if (m_max < m_lo) {
        out.verdict.detail = "nothing to scan: no admissible modulus <= " +
                             std::to_string(m_max);
        return out;
    }

    std::size_t count = static_cast<std::size_t>(m_max - m_lo + 1);
    std::optional<theorems::Witness> first_mismatch;
    ordered_parallel_map(
        count, workers,
        [&](std::size_t i) { return scan_modulus(id, m_lo + static_cast<i64>(i)); },
        [&](std::size_t, ChunkResult r) {
            out.classes_scanned += r.classes;
            out.exception_classes += r.exceptions;
            if (!first_mismatch && r.mismatch) first_mismatch = std::move(r.mismatch);
        });

    if (first_mismatch) {
        out.verdict.outcome = theorems::Outcome::fails;
        out.verdict.witness = std::move(*first_mismatch);
        out.verdict.detail = "inequality " + inequality_name(id) +
                             ": defect/classification mismatch";
    } else {
        out.verdict.detail = "inequality " + inequality_name(id) + ": " +
                             std::to_string(out.classes_scanned) +
                             " residue classes over moduli " + std::to_string(m_lo) +
                             ".." + std::to_string(m_max) + ", " +
                             std::to_string(out.exception_classes) +
                             " exception classes, all defects match";
    }
    return out;
}

} // namespace binomdiv::ineq
