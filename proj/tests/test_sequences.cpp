#include "binomdiv/sequences.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <vector>

using namespace binomdiv;
using namespace binomdiv::seq;

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);

    // C_{n+1} = sum_i C_i C_{n-i}
    std::vector<mpz_class> c;
    for (i64 n = 0; n <= 16; ++n) c.push_back(catalan(n));
    for (i64 n = 0; n <= 15; ++n) {
        mpz_class s = 0;
        for (i64 i = 0; i <= n; ++i) s += c[i] * c[n - i];
        CHECK(c[n + 1] == s);
    }
}

TEST_CASE("higher-order catalan numbers") {
    for (i64 n = 0; n <= 20; ++n) CHECK(catalan_order(1, n) == catalan(n));
    for (i64 h = 0; h <= 5; ++h) CHECK(catalan_order(h, 0) == 1);
    CHECK(catalan_order(4, 3) == 35); // C(15,3)/13
}

TEST_CASE("the two fifteen-factorial sequences match their frozen tables") {
    const std::vector<std::string> s_table = {
        "1",
        "203",
        "77572",
        "38903007",
        "22716425576",
        "14621862696188",
        "10071456400611060",
        "7291908546474763815",
    };
    for (i64 n = 1; n <= 8; ++n) CHECK(seq_s(n) == mpz_class(s_table[n - 1]));

    const std::vector<std::string> t_table = {
        "91",
        "858429",
        "12051818636",
        "200142760587609",
        "3648677478873075576",
    };
    for (i64 n = 1; n <= 5; ++n) CHECK(seq_t(n) == mpz_class(t_table[n - 1]));
}

TEST_CASE("the halved super Catalan variant") {
    CHECK(seq_S(1, 1) == 1);
    CHECK(seq_S(1, 7) == 1); // k=1 collapses to C(2n,n)C(n,n)/(1*C(2n,n))... times 1/2^0
    CHECK(seq_S(2, 1) == 5);
    // Frozen after confirming against the direct big-integer oracle below:
    // C(12,6)*C(6,2) / (2 * 5 * C(4,2)) = 924*15/60.
    CHECK(seq_S(2, 2) == 231);

    for (i64 k = 1; k <= 3; ++k) {
        i64 K = checked_pow(2, k) - 1;
        for (i64 n = 1; n <= 10; ++n) {
            mpz_class expected = oracle::binomial(2 * K * n, K * n) * oracle::binomial(K * n, n);
            mpz_class denom = (mpz_class(1) << (k - 1)) * ((K - 1) * n + 1) *
                              oracle::binomial(2 * n, n);
            CHECK(expected % denom == 0);
            CHECK(seq_S(k, n) == expected / denom);
        }
    }
}

TEST_CASE("the odd-product quotient sequence") {
    for (i64 m = 0; m <= 12; ++m) CHECK(seq_Q(m, 1) == 2 * m + 1);
    CHECK(seq_Q(0, 2) == 3);
    CHECK(seq_Q(1, 4) % 2 == 1);

    // n! * Q(m,n) = 2^{n-1} * prod_{j=1..n} (2m+2j-1), checked exactly.
    for (i64 m = 0; m <= 30; ++m)
        for (i64 n = 1; n <= 30; ++n) {
            mpz_class lhs = oracle::factorial(n) * seq_Q(m, n);
            mpz_class rhs = mpz_class(1) << (n - 1);
            for (i64 j = 1; j <= n; ++j) rhs *= 2 * m + 2 * j - 1;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("every named sequence equals its direct big-integer evaluation") {
    const std::vector<std::string> ids = {"catalan", "catalan:2", "catalan:4", "s", "t",
                                          "S:1",     "S:2",       "S:3",       "Q:0", "Q:1",
                                          "Q:3"};
    for (const auto& id_text : ids) {
        auto id = SequenceId::parse(id_text);
        for (i64 n = 1; n <= 12; ++n) {
            mpq_class direct = oracle::ratio_value(spec_for(id), n);
            REQUIRE(direct.get_den() == 1);
            CHECK(value(id, n) == direct.get_num());
        }
    }
}

TEST_CASE("sequence ids parse and print") {
    CHECK(SequenceId::parse("catalan").name() == "catalan");
    CHECK(SequenceId::parse("catalan:4").name() == "catalan:4");
    CHECK(SequenceId::parse("catalan:1").kind == SequenceId::Kind::catalan_order);
    CHECK(SequenceId::parse("s").name() == "s");
    CHECK(SequenceId::parse("t").name() == "t");
    CHECK(SequenceId::parse("S:2").name() == "S:2");
    CHECK(SequenceId::parse("Q:0").name() == "Q:0");
    CHECK_THROWS_AS(SequenceId::parse("S"), std::invalid_argument);
    CHECK_THROWS_AS(SequenceId::parse("Q"), std::invalid_argument);
    CHECK_THROWS_AS(SequenceId::parse("S:0"), std::invalid_argument);
    CHECK_THROWS_AS(SequenceId::parse("catalan:-1"), std::invalid_argument);
    CHECK_THROWS_AS(SequenceId::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(SequenceId::parse("s:1"), std::invalid_argument);
}

TEST_CASE("streaming emits 1..N in order") {
    std::vector<i64> ns;
    std::vector<mpz_class> vs;
    stream(SequenceId::parse("t"), 3, [&](i64 n, const mpz_class& v) {
        ns.push_back(n);
        vs.push_back(v);
    });
    CHECK(ns == std::vector<i64>{1, 2, 3});
    CHECK(vs[0] == 91);
    CHECK(vs[2] == mpz_class("12051818636"));
}

TEST_CASE("sequence argument errors") {
    CHECK_THROWS_AS(seq_s(0), std::invalid_argument);
    CHECK_THROWS_AS(seq_t(-1), std::invalid_argument);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
    CHECK_THROWS_AS(seq_S(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(seq_Q(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(catalan_order(-1, 2), std::invalid_argument);
}
