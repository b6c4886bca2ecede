#include "binomdiv/cli.hpp"
#include "binomdiv/conjectures.hpp"
#include "binomdiv/factorial_ratio.hpp"
#include "binomdiv/sequences.hpp"
#include "binomdiv/sieve.hpp"
#include "binomdiv/valuation.hpp"
#include "binomdiv/version.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

using namespace binomdiv;

py::object to_pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::tuple rational_tuple(const Rational& r) { return py::make_tuple(r.num, r.den); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact divisibility checks for binomial-coefficient products";
    m.attr("__version__") = kVersion;

    // prime/valuation layer
    m.def("is_prime", &valuation::is_prime, py::arg("n"));
    m.def(
        "digits",
        [](i64 n, i64 base) { return valuation::digits(n, base).digits; },
        py::arg("n"), py::arg("base"), "base-b digits, least significant first");
    m.def("digit_sum", &valuation::digit_sum, py::arg("n"), py::arg("base"));
    m.def("nu_factorial", &valuation::nu_factorial, py::arg("n"), py::arg("p"),
          "exponent of p in n!");
    m.def("nu_binomial", &valuation::nu_binomial, py::arg("a"), py::arg("b"), py::arg("p"),
          "exponent of p in C(a, b)");
    m.def("nu_integer", &valuation::nu_integer, py::arg("n"), py::arg("p"));
    m.def("is_power_of_two", &valuation::is_power_of_two, py::arg("n"));
    m.def("odd_part", &valuation::odd_part, py::arg("n"));
    m.def(
        "fractional_part_sum_identity",
        [](i64 n, i64 p) {
            auto [lhs, rhs] = valuation::fractional_part_sum_identity(n, p);
            return py::make_tuple(rational_tuple(lhs), rational_tuple(rhs));
        },
        py::arg("n"), py::arg("p"),
        "both sides of sum_j {n/p^j} = (n - digit_sum(n)) / (p - 1) ... as exact "
        "(numerator, denominator) pairs");
    m.def(
        "primes_up_to",
        [](i64 limit) {
            auto snapshot = ratio::primes_up_to(limit);
            std::vector<i64> out;
            for (i64 p : *snapshot) {
                if (p > limit) break;
                out.push_back(p);
            }
            return out;
        },
        py::arg("limit"));

    // factorial-ratio layer, addressed by the text grammar
    m.def(
        "ratio_canonical",
        [](const std::string& text) { return ratio::to_text(ratio::parse_spec(text)); },
        py::arg("spec"), "parse and re-serialize a ratio expression");
    m.def(
        "ratio_nu",
        [](const std::string& text, i64 n, i64 p) {
            return ratio::nu_at(ratio::parse_spec(text), n, p);
        },
        py::arg("spec"), py::arg("n"), py::arg("p"));
    m.def(
        "ratio_profile",
        [](const std::string& text, i64 n) {
            return ratio::profile(ratio::parse_spec(text), n).entries;
        },
        py::arg("spec"), py::arg("n"), "all (prime, exponent) pairs with nonzero exponent");
    m.def(
        "ratio_is_integer",
        [](const std::string& text, i64 n) {
            auto check = ratio::is_integer_at(ratio::parse_spec(text), n);
            return py::make_tuple(check.integral, check.violating_prime);
        },
        py::arg("spec"), py::arg("n"),
        "(integral, least violating prime or 0)");
    m.def(
        "ratio_value",
        [](const std::string& text, i64 n) {
            return to_pyint(ratio::reconstruct(ratio::parse_spec(text), n));
        },
        py::arg("spec"), py::arg("n"));
    m.def(
        "ratio_mod",
        [](const std::string& text, i64 n, i64 m) {
            return ratio::reconstruct_mod(ratio::parse_spec(text), n, m);
        },
        py::arg("spec"), py::arg("n"), py::arg("m"));
    m.def(
        "ratio_parity",
        [](const std::string& text, i64 n) {
            return ratio::parity(ratio::parse_spec(text), n) == ratio::Parity::odd
                       ? "odd"
                       : "even";
        },
        py::arg("spec"), py::arg("n"));

    // named sequences
    m.def(
        "catalan", [](i64 n) { return to_pyint(seq::catalan(n)); }, py::arg("n"));
    m.def(
        "catalan_order", [](i64 h, i64 n) { return to_pyint(seq::catalan_order(h, n)); },
        py::arg("h"), py::arg("n"));
    m.def(
        "seq_s", [](i64 n) { return to_pyint(seq::seq_s(n)); }, py::arg("n"));
    m.def(
        "seq_t", [](i64 n) { return to_pyint(seq::seq_t(n)); }, py::arg("n"));
    m.def(
        "seq_S", [](i64 k, i64 n) { return to_pyint(seq::seq_S(k, n)); }, py::arg("k"),
        py::arg("n"));
    m.def(
        "seq_Q", [](i64 m, i64 n) { return to_pyint(seq::seq_Q(m, n)); }, py::arg("m"),
        py::arg("n"));
    m.def(
        "seq_value",
        [](const std::string& id, i64 n) {
            return to_pyint(seq::value(seq::SequenceId::parse(id), n));
        },
        py::arg("id"), py::arg("n"), "value of catalan | catalan:h | s | t | S:k | Q:m");

    // f-search
    m.def(
        "f_search",
        [](i64 k, i64 l, i64 cap) {
            auto r = conj::f_search(k, l, cap);
            const char* status = r.status == conj::FSearchResult::Status::zero ? "zero"
                                 : r.status == conj::FSearchResult::Status::found
                                     ? "found"
                                     : "unknown";
            return py::make_tuple(status, r.n, r.cap);
        },
        py::arg("k"), py::arg("l"), py::arg("cap") = 5000,
        "(status, least violating n or 0, cap)");

    // full CLI, for driving everything else from Python
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "(exit_code, stdout, stderr)");
}
