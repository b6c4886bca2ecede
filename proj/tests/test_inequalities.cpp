#include "binomdiv/inequalities.hpp"

#include "doctest.h"

#include <random>

using namespace binomdiv;
using namespace binomdiv::ineq;

TEST_CASE("spot defects and classified exceptions") {
    CHECK(defect_2_1(1, 0, 0).defect >= 0);
    auto exc = defect_2_1(2, 2, 1);
    CHECK(exc.exception_expected);
    CHECK(exc.defect == -1);
    CHECK(defect_2_1(3, 1, 2).defect >= 0);

    CHECK_THROWS_AS(defect_2_2(2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(defect_2_2(1, 0, 0), std::invalid_argument);
    CHECK(defect_2_2(3, 0, 0).defect == 0);

    auto exc31 = defect_2_3_i(3, 2);
    CHECK(exc31.exception_expected);
    CHECK(exc31.defect == -1);

    for (i64 n : {2, 4}) {
        auto e = defect_2_3_ii(5, n);
        CHECK(e.exception_expected);
        CHECK(e.defect == -1);
    }

    CHECK(defect_3_3(1, 0, 0, 0).defect == 0);
}

TEST_CASE("defects depend on the arguments only through residues") {
    std::mt19937_64 rng(858429);
    auto random_shift = [&](i64 m) { return m * (1 + static_cast<i64>(rng() % 5)); };
    for (int trial = 0; trial < 200; ++trial) {
        i64 m = 1 + static_cast<i64>(rng() % 30);
        i64 k = static_cast<i64>(rng() % m);
        i64 l = static_cast<i64>(rng() % m);
        i64 n = static_cast<i64>(rng() % m);

        auto base21 = defect_2_1(m, k, n);
        auto shift21 = defect_2_1(m, k + random_shift(m), n + random_shift(m));
        CHECK(base21.defect == shift21.defect);
        CHECK(base21.exception_expected == shift21.exception_expected);

        if (m >= 3) {
            auto base22 = defect_2_2(m, k, n);
            auto shift22 = defect_2_2(m, k + random_shift(m), n + random_shift(m));
            CHECK(base22.defect == shift22.defect);
        }
        if (m >= 2) {
            CHECK(defect_2_3_i(m, n).defect == defect_2_3_i(m, n + random_shift(m)).defect);
            CHECK(defect_2_3_ii(m, n).defect == defect_2_3_ii(m, n + random_shift(m)).defect);
        }
        auto base33 = defect_3_3(m, k, l, n);
        auto shift33 =
            defect_3_3(m, k + random_shift(m), l + random_shift(m), n + random_shift(m));
        CHECK(base33.defect == shift33.defect);
    }
}

TEST_CASE("defects stay within the observed window") {
    std::mt19937_64 rng(12051818);
    for (int trial = 0; trial < 2000; ++trial) {
        i64 m = 1 + static_cast<i64>(rng() % 60);
        i64 k = static_cast<i64>(rng() % m);
        i64 l = static_cast<i64>(rng() % m);
        i64 n = static_cast<i64>(rng() % m);
        for (i64 d : {defect_2_1(m, k, n).defect, defect_3_3(m, k, l, n).defect}) {
            CHECK(d >= -1);
            CHECK(d <= 4);
        }
        if (m >= 3) CHECK(defect_2_2(m, k, n).defect >= 0);
        if (m >= 2) {
            CHECK(defect_2_3_i(m, n).defect >= -1);
            CHECK(defect_2_3_ii(m, n).defect >= -1);
        }
    }
}

TEST_CASE("fractional-part lemma holds exactly") {
    auto verdict = check_lemma_2_1(60);
    CHECK(verdict.ok());
    CHECK_THROWS_AS(check_lemma_2_1(0), std::invalid_argument);
}

TEST_CASE("inequality ids parse and print") {
    CHECK(parse_inequality("2.1") == InequalityId::thm_2_1);
    CHECK(parse_inequality("2.3ii") == InequalityId::thm_2_3_ii);
    CHECK(parse_inequality("L2.1") == InequalityId::lemma_2_1);
    CHECK(inequality_name(InequalityId::thm_2_3_i) == "2.3i");
    CHECK(inequality_name(InequalityId::lemma_3_3) == "3.3");
    CHECK_THROWS_AS(parse_inequality("9.9"), std::invalid_argument);
}

TEST_CASE("exhaustive scans match the exception classification") {
    auto scan21 = exhaustive_scan(InequalityId::thm_2_1, 2);
    CHECK(scan21.verdict.ok());
    CHECK(scan21.exception_classes == 1); // only (m=2, k=0, n=1)

    auto scan22 = exhaustive_scan(InequalityId::thm_2_2, 10);
    CHECK(scan22.verdict.ok());
    CHECK(scan22.exception_classes == 0);

    auto scan23i = exhaustive_scan(InequalityId::thm_2_3_i, 9);
    CHECK(scan23i.verdict.ok());
    CHECK(scan23i.exception_classes == 3); // m = 3, 6, 9

    auto scan23ii = exhaustive_scan(InequalityId::thm_2_3_ii, 10);
    CHECK(scan23ii.verdict.ok());
    CHECK(scan23ii.exception_classes == 4); // (m=5) x 2 residues, (m=10) x 2

    auto scan33 = exhaustive_scan(InequalityId::lemma_3_3, 12);
    CHECK(scan33.verdict.ok());
    CHECK(scan33.exception_classes == 0);

    auto lemma = exhaustive_scan(InequalityId::lemma_2_1, 40);
    CHECK(lemma.verdict.ok());
}

TEST_CASE("exception-class counts follow the even-modulus rule") {
    // One exception class per even m (k = m/2+1, n = m-1), none for odd m.
    for (i64 m_max : {5, 12, 25}) {
        auto scan = exhaustive_scan(InequalityId::thm_2_1, m_max);
        CHECK(scan.verdict.ok());
        CHECK(scan.exception_classes == m_max / 2);
    }
}

TEST_CASE("scans are worker-count independent") {
    auto serial = exhaustive_scan(InequalityId::thm_2_1, 30, 1);
    auto parallel = exhaustive_scan(InequalityId::thm_2_1, 30, 4);
    CHECK(serial.classes_scanned == parallel.classes_scanned);
    CHECK(serial.exception_classes == parallel.exception_classes);
    CHECK(serial.verdict.ok() == parallel.verdict.ok());
}
