// Acceptance runner: exercises the binding result checks end to end, one
// numbered criterion per line, with runtime budgets pinned here. Criteria 1-3
// drive the CLI binary (path in argv[1]); the rest call the library directly.
#include "binomdiv/conjectures.hpp"
#include "binomdiv/inequalities.hpp"
#include "binomdiv/parallel.hpp"
#include "binomdiv/sequences.hpp"
#include "binomdiv/theorems.hpp"
#include "binomdiv/valuation.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

namespace {

using binomdiv::i64;

unsigned hw_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 64u);
}

struct BinaryResult {
    int code{-1};
    std::string out;
};

BinaryResult run_binary(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    BinaryResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

struct Outcome {
    bool pass{false};
    std::string detail; // shown indented when non-empty
};

bool run_criterion(int index, const std::string& label, double budget_s,
                   const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count();
    bool within = elapsed < budget_s;
    bool pass = outcome.pass && within;
    char line[512];
    std::snprintf(line, sizeof line, "[%s] criterion %d: %s (%.2fs, budget %gs)",
                  pass ? "PASS" : "FAIL", index, label.c_str(), elapsed, budget_s);
    std::cout << line << "\n";
    if (!outcome.detail.empty()) std::cout << "       " << outcome.detail << "\n";
    if (outcome.pass && !within) std::cout << "       over budget\n";
    return pass;
}

Outcome expect_cli(const std::string& cmd, const std::string& golden) {
    auto r = run_binary(cmd);
    if (r.code != 0)
        return {false, "exit code " + std::to_string(r.code) + " from: " + cmd};
    if (r.out != golden)
        return {false, "output mismatch from: " + cmd + "\n       got:\n" + r.out};
    return {true, {}};
}

// Runs `chunks` independent jobs and reports the first failure message.
std::optional<std::string>
first_failure(std::size_t chunks,
              const std::function<std::optional<std::string>(std::size_t)>& job) {
    std::optional<std::string> failure;
    binomdiv::ordered_parallel_map(chunks, hw_workers(), job,
                                   [&](std::size_t, std::optional<std::string> f) {
                                       if (f && !failure) failure = std::move(f);
                                   });
    return failure;
}

std::string describe(const binomdiv::theorems::Verdict& v) {
    if (v.witness) return v.witness->note;
    return v.detail.empty() ? std::string("no detail") : v.detail;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = std::string("'") + argv[1] + "'";
    const std::string workers_flag = " --workers " + std::to_string(hw_workers());

    int passed = 0, total = 0;
    auto criterion = [&](int index, const std::string& label, double budget,
                         const std::function<Outcome()>& body) {
        ++total;
        if (run_criterion(index, label, budget, body)) ++passed;
    };

    criterion(1, "seq s --max 8 matches the published table", 1.0, [&] {
        return expect_cli(cli + " seq s --max 8 --format csv --cache off",
                          "1,1\n"
                          "2,203\n"
                          "3,77572\n"
                          "4,38903007\n"
                          "5,22716425576\n"
                          "6,14621862696188\n"
                          "7,10071456400611060\n"
                          "8,7291908546474763815\n");
    });

    criterion(2, "seq t --max 5 matches the published table", 5.0, [&] {
        return expect_cli(cli + " seq t --max 5 --format csv --cache off",
                          "1,91\n"
                          "2,858429\n"
                          "3,12051818636\n"
                          "4,200142760587609\n"
                          "5,3648677478873075576\n");
    });

    criterion(3, "fsearch --pairs paper --cap 5000 reproduces all twelve values", 60.0, [&] {
        return expect_cli(cli + " fsearch --pairs paper --cap 5000 --format csv --cache off" +
                              workers_flag,
                          "7,36,found,279\n"
                          "10,192,found,362\n"
                          "11,100,found,1187\n"
                          "13,144,found,2001\n"
                          "22,200,found,6462\n"
                          "31,171,found,1765\n"
                          "43,26,found,640\n"
                          "53,32,found,790\n"
                          "67,56,found,2004\n"
                          "73,61,found,2184\n"
                          "74,62,found,885\n"
                          "97,81,found,2904\n");
    });

    criterion(4, "theorem sweeps hold for n <= 200, k,l <= 10, m <= 50", 120.0, [&] {
        namespace th = binomdiv::theorems;
        const i64 n_max = 200, kl_max = 10, m_max = 50;

        auto row = [&](const std::string& name, i64 first,
                       const std::function<th::Verdict(i64, i64)>& fn) {
            return [&, name, first, fn](std::size_t idx) -> std::optional<std::string> {
                i64 a = first + static_cast<i64>(idx);
                for (i64 n = 1; n <= n_max; ++n) {
                    auto v = fn(a, n);
                    if (!v.ok())
                        return name + " at (" + std::to_string(a) + ", " + std::to_string(n) +
                               "): " + describe(v);
                }
                return std::nullopt;
            };
        };

        if (auto f = first_failure(static_cast<std::size_t>(m_max + 1),
                                   row("1.1i", 0, th::verify_1_1_i)))
            return Outcome{false, *f};
        for (auto [name, fn] : std::vector<std::pair<std::string, th::Verdict (*)(i64, i64)>>{
                 {"1.1ii", th::verify_1_1_ii},
                 {"1.2i", th::verify_1_2_i},
                 {"1.2ii", th::verify_1_2_ii},
                 {"1.2iii", th::verify_1_2_iii}})
            if (auto f = first_failure(static_cast<std::size_t>(kl_max), row(name, 1, fn)))
                return Outcome{false, *f};
        for (i64 n = 1; n <= n_max; ++n) {
            auto v = th::verify_1_3(n);
            if (!v.ok())
                return Outcome{false, "1.3 at n=" + std::to_string(n) + ": " + describe(v)};
        }
        if (auto f = first_failure(static_cast<std::size_t>(kl_max * kl_max),
                                   [&](std::size_t idx) -> std::optional<std::string> {
                                       i64 k = 1 + static_cast<i64>(idx) / kl_max;
                                       i64 l = 1 + static_cast<i64>(idx) % kl_max;
                                       for (i64 n = 1; n <= n_max; ++n) {
                                           auto v = th::verify_1_4(k, l, n);
                                           if (!v.ok())
                                               return "1.4 at (" + std::to_string(k) + ", " +
                                                      std::to_string(l) + ", " +
                                                      std::to_string(n) + "): " + describe(v);
                                       }
                                       return std::nullopt;
                                   }))
            return Outcome{false, *f};
        return Outcome{true, {}};
    });

    criterion(5, "inequality scans classify every residue exactly", 120.0, [&] {
        namespace iq = binomdiv::ineq;
        const std::vector<std::pair<iq::InequalityId, i64>> scans = {
            {iq::InequalityId::thm_2_1, 200},  {iq::InequalityId::thm_2_2, 150},
            {iq::InequalityId::thm_2_3_i, 150}, {iq::InequalityId::thm_2_3_ii, 150},
            {iq::InequalityId::lemma_3_3, 60},
        };
        for (auto [id, m_max] : scans) {
            auto summary = iq::exhaustive_scan(id, m_max, hw_workers());
            if (!summary.verdict.ok())
                return Outcome{false, iq::inequality_name(id) + " (m_max " +
                                          std::to_string(m_max) +
                                          "): " + describe(summary.verdict)};
        }
        return Outcome{true, {}};
    });

    criterion(6, "fractional-part inequality holds at sixtieths, midpoints, and "
                 "denominators <= 200",
              5.0, [&] {
                  auto v = binomdiv::ineq::check_lemma_2_1(200);
                  return Outcome{v.ok(), v.ok() ? std::string{} : describe(v)};
              });

    criterion(7, "valuation, reconstruction, and modular paths agree with brute force",
              30.0, [&] {
                  namespace ratio = binomdiv::ratio;
                  namespace seq = binomdiv::seq;
                  const std::vector<i64> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                                   31, 37, 41, 43, 47};
                  for (i64 n = 0; n <= 2000; ++n)
                      for (i64 p : primes)
                          if (binomdiv::valuation::nu_factorial(n, p) !=
                              oracle::nu_factorial_brute(n, p))
                              return Outcome{false, "nu_factorial(" + std::to_string(n) +
                                                        ", " + std::to_string(p) +
                                                        ") disagrees with brute force"};

                  std::vector<std::pair<std::string, ratio::FactorialRatioSpec>> named = {
                      {"catalan", seq::spec_catalan()},
                      {"catalan:0", seq::spec_catalan_order(0)},
                      {"catalan:2", seq::spec_catalan_order(2)},
                      {"catalan:4", seq::spec_catalan_order(4)},
                      {"s", seq::spec_s()},
                      {"t", seq::spec_t()},
                      {"S:1", seq::spec_S(1)},
                      {"S:2", seq::spec_S(2)},
                      {"S:3", seq::spec_S(3)},
                      {"Q:0", seq::spec_Q(0)},
                      {"Q:1", seq::spec_Q(1)},
                      {"Q:4", seq::spec_Q(4)},
                  };
                  for (const auto& [name, spec] : named)
                      for (i64 n = 1; n <= 12; ++n) {
                          mpq_class direct = oracle::ratio_value(spec, n);
                          if (direct.get_den() != 1)
                              return Outcome{false, name + " at n=" + std::to_string(n) +
                                                        " is not an integer"};
                          if (ratio::reconstruct(spec, n) != direct.get_num())
                              return Outcome{false,
                                             "reconstruct(" + name + ", " +
                                                 std::to_string(n) +
                                                 ") disagrees with direct evaluation"};
                      }

                  for (const auto& [name, spec] : named)
                      for (i64 n = 1; n <= 40; ++n) {
                          mpz_class big = ratio::reconstruct(spec, n);
                          for (i64 m : {i64{2}, i64{3}, i64{10}, i64{97}, 10 * n + 3}) {
                              mpz_class expect = big % m;
                              if (ratio::reconstruct_mod(spec, n, m) != expect.get_si())
                                  return Outcome{false, "reconstruct_mod(" + name + ", " +
                                                            std::to_string(n) + ", " +
                                                            std::to_string(m) +
                                                            ") disagrees with reconstruct"};
                          }
                      }
                  return Outcome{true, {}};
              });

    criterion(8, "conjecture scans survive their pinned ranges", 300.0, [&] {
        namespace conj = binomdiv::conj;
        auto digit = conj::conj_1_1_scan(16, 8, 10000, hw_workers());
        if (!digit.survived())
            return Outcome{false, "digit-sum scan found " +
                                      std::to_string(digit.counterexamples.size()) +
                                      " counterexamples; first note: " +
                                      digit.counterexamples.front().note};
        auto modular = conj::conj_1_2_scan(300, hw_workers());
        if (!modular.survived())
            return Outcome{false, "10n+3 divisibility scan failed: " +
                                      modular.counterexamples.front().note};
        auto families = conj::conj_1_3_scan(8, 8, 100, hw_workers());
        if (!families.survived())
            return Outcome{false, "family classification scan failed: " +
                                      families.counterexamples.front().note};
        return Outcome{true, {}};
    });

    criterion(9, "binomial product identities hold exactly for m <= 30, n <= 30", 5.0, [&] {
        for (i64 m = 0; m <= 30; ++m)
            for (i64 n = 1; n <= 30; ++n) {
                mpz_class lhs1 = oracle::binomial(2 * n, n) *
                                 oracle::binomial(2 * m + 2 * n, 2 * n) *
                                 oracle::binomial(2 * m, m);
                mpz_class c_mn = oracle::binomial(m + n, n);
                mpz_class rhs1 = oracle::binomial(2 * m + 2 * n, m + n) * c_mn * c_mn;
                if (lhs1 != rhs1)
                    return Outcome{false, "first identity fails at m=" + std::to_string(m) +
                                              ", n=" + std::to_string(n)};
                mpz_class lhs2 = oracle::binomial(2 * n, n) *
                                 oracle::binomial(2 * m + 2 * n, 2 * n - 1) *
                                 oracle::binomial(2 * m + 1, m);
                mpz_class rhs2 = 2 * oracle::binomial(2 * m + 2 * n, m + n) *
                                 oracle::binomial(m + n, n - 1) * c_mn;
                if (lhs2 != rhs2)
                    return Outcome{false, "second identity fails at m=" + std::to_string(m) +
                                              ", n=" + std::to_string(n)};
                mpz_class gessel = oracle::binomial(2 * m + 2 * n, m + n) * c_mn;
                if (gessel % oracle::binomial(2 * n, n) != 0)
                    return Outcome{false, "quotient integrality fails at m=" +
                                              std::to_string(m) + ", n=" + std::to_string(n)};
            }
        return Outcome{true, {}};
    });

    std::cout << "acceptance: " << passed << "/" << total << " criteria passed\n";
    return passed == total ? 0 : 1;
}
