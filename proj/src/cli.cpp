#include "binomdiv/cli.hpp"

#include "binomdiv/conjectures.hpp"
#include "binomdiv/inequalities.hpp"
#include "binomdiv/parallel.hpp"
#include "binomdiv/sequences.hpp"
#include "binomdiv/theorems.hpp"
#include "binomdiv/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

namespace binomdiv::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, csv, plain };

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "plain") return Format::plain;
    throw std::invalid_argument("unknown format: " + text);
}

struct RunConfig {
    Format format{Format::plain};
    std::string cache_path; // empty = caching disabled
    unsigned workers{1};
};

// ---------------------------------------------------------------------------
// Cache: append-only line-delimited records, one JSON object per line with
// fields op / params / version / timestamp / result. Lookup scans the whole
// file and keeps the newest record matching (op, params) whose version equals
// the current artifact version; corrupt lines are skipped with a warning.

std::optional<ordered_json> cache_lookup(const RunConfig& cfg, const std::string& op,
                                         const std::string& params, std::ostream& err) {
    if (cfg.cache_path.empty()) return std::nullopt;
    std::ifstream in(cfg.cache_path);
    if (!in) return std::nullopt; // absent cache is a miss, not an error
    std::optional<ordered_json> hit;
    std::string line;
    for (long lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        try {
            ordered_json rec = ordered_json::parse(line);
            if (rec.at("op") != op || rec.at("params") != params) continue;
            if (rec.at("version") != std::string(kVersion)) continue;
            hit = rec.at("result");
        } catch (const std::exception&) {
            err << "cache: skipping corrupt record at " << cfg.cache_path << ":" << lineno
                << "\n";
        }
    }
    return hit;
}

void cache_append(const RunConfig& cfg, const std::string& op, const std::string& params,
                  const ordered_json& result, std::ostream& err) {
    if (cfg.cache_path.empty()) return;
    std::ofstream out(cfg.cache_path, std::ios::app);
    if (!out) {
        err << "cache: cannot open " << cfg.cache_path << " for append; result not cached\n";
        return;
    }
    ordered_json rec;
    rec["op"] = op;
    rec["params"] = params;
    rec["version"] = kVersion;
    rec["timestamp"] = static_cast<i64>(std::chrono::duration_cast<std::chrono::seconds>(
                                            std::chrono::system_clock::now().time_since_epoch())
                                            .count());
    rec["result"] = result;
    out << rec.dump() << "\n";
}

// ---------------------------------------------------------------------------
// Rendering. Payloads are fully deterministic (no timestamps, no timings), so
// json and csv output is byte-identical across identical invocations.

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join_params(const ordered_json& params, const char* sep = ";") {
    std::string text;
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (!text.empty()) text += sep;
        text += it.key() + "=" + it.value().dump();
    }
    return text;
}

std::string fsearch_status_value(const ordered_json& r) {
    std::string status = r.at("status");
    if (status == "found") return std::to_string(r.at("n").get<i64>());
    if (status == "zero") return "0";
    return std::to_string(r.at("cap").get<i64>());
}

void emit_csv(const ordered_json& p, std::ostream& out) {
    std::string op = p.at("op");
    if (op == "error") {
        out << "error," << csv_cell(p.at("message")) << "\n";
        if (p.contains("violating_prime"))
            out << "violating_prime," << p.at("violating_prime").get<i64>() << "\n";
        return;
    }
    if (op == "seq") {
        for (const auto& row : p.at("values"))
            out << row.at("n").get<i64>() << "," << row.at("value").get<std::string>() << "\n";
    } else if (op == "verify") {
        for (const auto& f : p.at("failures"))
            out << p.at("theorem").get<std::string>() << ","
                << csv_cell(join_params(f.at("params"))) << ","
                << f.at("violating_prime").get<i64>() << "," << csv_cell(f.at("note")) << "\n";
    } else if (op == "ineq") {
        if (!p.at("mismatch").is_null())
            out << p.at("theorem").get<std::string>() << ","
                << csv_cell(join_params(p.at("mismatch").at("params"))) << ","
                << csv_cell(p.at("mismatch").at("note")) << "\n";
    } else if (op == "conjecture") {
        for (const auto& ce : p.at("counterexamples"))
            out << p.at("id").get<std::string>() << ","
                << csv_cell(join_params(ce.at("params"))) << "," << csv_cell(ce.at("note"))
                << "\n";
    } else if (op == "fsearch") {
        for (const auto& r : p.at("results"))
            out << r.at("k").get<i64>() << "," << r.at("l").get<i64>() << ","
                << r.at("status").get<std::string>() << "," << fsearch_status_value(r) << "\n";
    } else if (op == "ratio") {
        const std::string action = p.at("action");
        if (action == "value") {
            out << p.at("value").get<std::string>() << "\n";
        } else if (action == "integer") {
            if (p.at("integral").get<bool>()) out << "integral\n";
            else out << "nonintegral," << p.at("violating_prime").get<i64>() << "\n";
        } else if (action == "profile") {
            for (const auto& e : p.at("profile"))
                out << e.at(0).get<i64>() << "," << e.at(1).get<i64>() << "\n";
        } else if (action == "nu") {
            out << p.at("p").get<i64>() << "," << p.at("nu").get<i64>() << "\n";
        } else if (action == "mod") {
            out << p.at("mod").get<i64>() << "," << p.at("residue").get<i64>() << "\n";
        } else if (action == "parity") {
            out << p.at("parity").get<std::string>() << "\n";
        }
    }
}

void emit_plain(const ordered_json& p, std::ostream& out) {
    std::string op = p.at("op");
    if (op == "error") {
        out << "error: " << p.at("message").get<std::string>() << "\n";
        return;
    }
    if (op == "seq") {
        std::string id = p.at("id");
        for (const auto& row : p.at("values"))
            out << id << "(" << row.at("n").get<i64>()
                << ") = " << row.at("value").get<std::string>() << "\n";
    } else if (op == "verify") {
        for (const auto& f : p.at("failures")) {
            out << "FAIL " << join_params(f.at("params"), ", ") << ": "
                << f.at("note").get<std::string>();
            if (f.at("violating_prime").get<i64>() != 0)
                out << " (prime " << f.at("violating_prime").get<i64>() << ")";
            out << "\n";
        }
        for (const auto& q : p.at("inconclusive"))
            out << "INCONCLUSIVE " << join_params(q.at("params"), ", ") << ": "
                << q.at("detail").get<std::string>() << "\n";
        out << "verify " << p.at("theorem").get<std::string>() << ": "
            << p.at("cases").get<i64>() << " cases, " << p.at("failures").size()
            << " failures";
        if (!p.at("inconclusive").empty())
            out << ", " << p.at("inconclusive").size() << " inconclusive";
        out << "\n";
    } else if (op == "ineq") {
        if (!p.at("mismatch").is_null())
            out << "MISMATCH " << join_params(p.at("mismatch").at("params"), ", ") << ": "
                << p.at("mismatch").at("note").get<std::string>() << "\n";
        out << "ineq " << p.at("theorem").get<std::string>() << ": "
            << p.at("classes_scanned").get<i64>() << " residue classes, "
            << p.at("exception_classes").get<i64>() << " exception classes, "
            << (p.at("mismatch").is_null() ? "classification exact" : "classification MISMATCH")
            << "\n";
    } else if (op == "conjecture") {
        for (const auto& ce : p.at("counterexamples"))
            out << "COUNTEREXAMPLE " << join_params(ce.at("params"), ", ") << ": "
                << ce.at("note").get<std::string>() << "\n";
        out << "conjecture " << p.at("id").get<std::string>() << ": "
            << p.at("cases_checked").get<i64>() << " cases, "
            << (p.at("counterexamples").empty()
                    ? "survived"
                    : std::to_string(p.at("counterexamples").size()) + " counterexamples")
            << "\n";
    } else if (op == "fsearch") {
        for (const auto& r : p.at("results")) {
            std::string status = r.at("status");
            out << "f(" << r.at("k").get<i64>() << ", " << r.at("l").get<i64>() << ") ";
            if (status == "found") out << "= " << r.at("n").get<i64>();
            else if (status == "zero") out << "= 0 (ln+1 divides C(kn+ln, kn) for every n)";
            else out << "unknown up to " << r.at("cap").get<i64>();
            out << "\n";
        }
        if (p.contains("pairs")) out << "all published values reproduced\n";
    } else if (op == "ratio") {
        const std::string action = p.at("action");
        out << p.at("spec").get<std::string>() << " at n=" << p.at("n").get<i64>() << ": ";
        if (action == "value") {
            out << p.at("value").get<std::string>() << "\n";
        } else if (action == "integer") {
            if (p.at("integral").get<bool>()) out << "integer\n";
            else
                out << "not an integer (prime " << p.at("violating_prime").get<i64>() << ")\n";
        } else if (action == "profile") {
            bool first = true;
            for (const auto& e : p.at("profile")) {
                if (!first) out << " ";
                first = false;
                out << e.at(0).get<i64>() << "^" << e.at(1).get<i64>();
            }
            if (first) out << "1";
            out << "\n";
        } else if (action == "nu") {
            out << "nu_" << p.at("p").get<i64>() << " = " << p.at("nu").get<i64>() << "\n";
        } else if (action == "mod") {
            out << "residue mod " << p.at("mod").get<i64>() << " = "
                << p.at("residue").get<i64>() << "\n";
        } else if (action == "parity") {
            out << p.at("parity").get<std::string>() << "\n";
        }
    }
}

void emit(const ordered_json& payload, Format fmt, std::ostream& out) {
    switch (fmt) {
    case Format::json: out << payload.dump(2) << "\n"; break;
    case Format::csv: emit_csv(payload, out); break;
    case Format::plain: emit_plain(payload, out); break;
    }
}

// ---------------------------------------------------------------------------
// Subcommand handlers. Each returns a deterministic payload; the caller
// renders it and derives the exit code from its status field.

ordered_json params_json(const std::vector<std::pair<std::string, i64>>& params) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, val] : params) obj[key] = val;
    return obj;
}

ordered_json run_seq(const std::string& id_text, i64 n_max) {
    auto id = seq::SequenceId::parse(id_text);
    ordered_json payload;
    payload["op"] = "seq";
    payload["id"] = id.name();
    payload["max"] = n_max;
    payload["version"] = kVersion;
    ordered_json values = ordered_json::array();
    seq::stream(id, n_max, [&](i64 n, const mpz_class& v) {
        values.push_back({{"n", n}, {"value", v.get_str()}});
    });
    payload["values"] = std::move(values);
    return payload;
}

ordered_json run_verify(const std::string& theorem, i64 k_max, i64 l_max, i64 m_max,
                        i64 n_max, unsigned workers) {
    if (k_max < 1 || l_max < 1 || m_max < 0 || n_max < 1)
        throw std::invalid_argument("verify: need k_max, l_max, n_max >= 1 and m_max >= 0");

    std::size_t total = 0;
    std::function<theorems::Verdict(std::size_t)> eval;
    std::function<std::vector<std::pair<std::string, i64>>(std::size_t)> params_of;
    ordered_json ranges = ordered_json::object();

    auto two_index = [n_max](std::size_t idx, i64 lo_first) {
        return std::pair<i64, i64>{lo_first + static_cast<i64>(idx) / n_max,
                                   1 + static_cast<i64>(idx) % n_max};
    };
    if (theorem == "1.1i") {
        total = static_cast<std::size_t>((m_max + 1) * n_max);
        eval = [=](std::size_t idx) {
            auto [m, n] = two_index(idx, 0);
            return theorems::verify_1_1_i(m, n);
        };
        params_of = [=](std::size_t idx) {
            auto [m, n] = two_index(idx, 0);
            return std::vector<std::pair<std::string, i64>>{{"m", m}, {"n", n}};
        };
        ranges["m_max"] = m_max;
        ranges["n_max"] = n_max;
    } else if (theorem == "1.1ii" || theorem == "1.2i" || theorem == "1.2ii" ||
               theorem == "1.2iii") {
        total = static_cast<std::size_t>(k_max * n_max);
        auto fn = theorem == "1.1ii"   ? theorems::verify_1_1_ii
                  : theorem == "1.2i"  ? theorems::verify_1_2_i
                  : theorem == "1.2ii" ? theorems::verify_1_2_ii
                                       : theorems::verify_1_2_iii;
        eval = [=](std::size_t idx) {
            auto [k, n] = two_index(idx, 1);
            return fn(k, n);
        };
        params_of = [=](std::size_t idx) {
            auto [k, n] = two_index(idx, 1);
            return std::vector<std::pair<std::string, i64>>{{"k", k}, {"n", n}};
        };
        ranges["k_max"] = k_max;
        ranges["n_max"] = n_max;
    } else if (theorem == "1.3") {
        total = static_cast<std::size_t>(n_max);
        eval = [](std::size_t idx) { return theorems::verify_1_3(1 + static_cast<i64>(idx)); };
        params_of = [](std::size_t idx) {
            return std::vector<std::pair<std::string, i64>>{{"n", 1 + static_cast<i64>(idx)}};
        };
        ranges["n_max"] = n_max;
    } else if (theorem == "1.4") {
        total = static_cast<std::size_t>(k_max * l_max * n_max);
        auto split = [=](std::size_t idx) {
            i64 k = 1 + static_cast<i64>(idx) / (l_max * n_max);
            i64 l = 1 + (static_cast<i64>(idx) / n_max) % l_max;
            i64 n = 1 + static_cast<i64>(idx) % n_max;
            return std::tuple<i64, i64, i64>{k, l, n};
        };
        eval = [=](std::size_t idx) {
            auto [k, l, n] = split(idx);
            return theorems::verify_1_4(k, l, n);
        };
        params_of = [=](std::size_t idx) {
            auto [k, l, n] = split(idx);
            return std::vector<std::pair<std::string, i64>>{{"k", k}, {"l", l}, {"n", n}};
        };
        ranges["k_max"] = k_max;
        ranges["l_max"] = l_max;
        ranges["n_max"] = n_max;
    } else if (theorem == "bober") {
        total = static_cast<std::size_t>(k_max * l_max);
        auto split = [=](std::size_t idx) {
            return std::pair<i64, i64>{1 + static_cast<i64>(idx) / l_max,
                                       1 + static_cast<i64>(idx) % l_max};
        };
        eval = [=](std::size_t idx) {
            auto [k, l] = split(idx);
            return theorems::verify_bober_family(k, l, n_max);
        };
        params_of = [=](std::size_t idx) {
            auto [k, l] = split(idx);
            return std::vector<std::pair<std::string, i64>>{{"k", k}, {"l", l}};
        };
        ranges["k_max"] = k_max;
        ranges["l_max"] = l_max;
        ranges["n_max"] = n_max;
    } else {
        throw std::invalid_argument("verify: unknown theorem id " + theorem);
    }

    ordered_json failures = ordered_json::array();
    ordered_json inconclusive = ordered_json::array();
    ordered_parallel_map(total, workers, eval, [&](std::size_t idx, theorems::Verdict v) {
        if (v.outcome == theorems::Outcome::fails) {
            const auto& w = *v.witness;
            failures.push_back({{"params", params_json(w.params.empty() ? params_of(idx)
                                                                        : w.params)},
                                {"violating_prime", w.violating_prime},
                                {"note", w.note}});
        } else if (v.outcome == theorems::Outcome::inconclusive) {
            inconclusive.push_back({{"params", params_json(params_of(idx))},
                                    {"detail", v.detail}});
        }
    });

    ordered_json payload;
    payload["op"] = "verify";
    payload["theorem"] = theorem;
    payload["params"] = std::move(ranges);
    payload["version"] = kVersion;
    payload["cases"] = static_cast<i64>(total);
    payload["failures"] = std::move(failures);
    payload["inconclusive"] = std::move(inconclusive);
    payload["status"] = payload["failures"].empty() ? "pass" : "fail";
    return payload;
}

ordered_json run_ineq(const std::string& theorem, i64 m_max, unsigned workers) {
    auto id = ineq::parse_inequality(theorem);
    auto summary = ineq::exhaustive_scan(id, m_max, workers);
    ordered_json payload;
    payload["op"] = "ineq";
    payload["theorem"] = ineq::inequality_name(id);
    payload["m_max"] = m_max;
    payload["version"] = kVersion;
    payload["classes_scanned"] = summary.classes_scanned;
    payload["exception_classes"] = summary.exception_classes;
    if (summary.verdict.ok()) {
        payload["mismatch"] = nullptr;
    } else {
        const auto& w = *summary.verdict.witness;
        payload["mismatch"] = {{"params", params_json(w.params)}, {"note", w.note}};
    }
    payload["status"] = summary.verdict.ok() ? "pass" : "fail";
    return payload;
}

ordered_json scan_payload(const std::string& id, const conj::ScanReport& report) {
    ordered_json payload;
    payload["op"] = "conjecture";
    payload["id"] = id;
    ordered_json ranges = ordered_json::object();
    for (const auto& [key, val] : report.ranges) ranges[key] = val;
    payload["params"] = std::move(ranges);
    payload["version"] = kVersion;
    payload["cases_checked"] = report.cases_checked;
    ordered_json ces = ordered_json::array();
    for (const auto& ce : report.counterexamples)
        ces.push_back({{"params", params_json(ce.params)}, {"note", ce.note}});
    payload["counterexamples"] = std::move(ces);
    payload["status"] = report.survived() ? "survived" : "violated";
    return payload;
}

ordered_json fsearch_result_json(const conj::FSearchResult& r) {
    ordered_json obj;
    obj["k"] = r.k;
    obj["l"] = r.l;
    switch (r.status) {
    case conj::FSearchResult::Status::zero:
        obj["status"] = "zero";
        obj["n"] = 0;
        break;
    case conj::FSearchResult::Status::found:
        obj["status"] = "found";
        obj["n"] = r.n;
        break;
    case conj::FSearchResult::Status::unknown:
        obj["status"] = "unknown";
        obj["cap"] = r.cap;
        break;
    }
    return obj;
}

ordered_json run_ratio(const std::string& spec_text, i64 n, const std::string& action, i64 p,
                       i64 mod) {
    auto spec = ratio::parse_spec(spec_text);
    ordered_json payload;
    payload["op"] = "ratio";
    payload["spec"] = ratio::to_text(spec);
    payload["n"] = n;
    payload["action"] = action;
    payload["version"] = kVersion;
    if (action == "value") {
        payload["value"] = ratio::reconstruct(spec, n).get_str();
    } else if (action == "integer") {
        auto check = ratio::is_integer_at(spec, n);
        payload["integral"] = check.integral;
        if (!check.integral) payload["violating_prime"] = check.violating_prime;
    } else if (action == "profile") {
        ordered_json entries = ordered_json::array();
        for (const auto& [prime, exponent] : ratio::profile(spec, n).entries)
            entries.push_back({prime, exponent});
        payload["profile"] = std::move(entries);
    } else if (action == "nu") {
        payload["p"] = p;
        payload["nu"] = ratio::nu_at(spec, n, p);
    } else if (action == "mod") {
        payload["mod"] = mod;
        payload["residue"] = ratio::reconstruct_mod(spec, n, mod);
    } else if (action == "parity") {
        payload["parity"] = ratio::parity(spec, n) == ratio::Parity::odd ? "odd" : "even";
    } else {
        throw std::invalid_argument("ratio: unknown action " + action);
    }
    return payload;
}

int exit_code_of(const ordered_json& payload) {
    if (!payload.contains("status")) return 0;
    std::string status = payload["status"];
    return (status == "fail" || status == "violated") ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact divisibility checks for binomial-coefficient products"};
    app.name("binomdiv");
    app.require_subcommand(1);

    std::string format_text = "plain";
    std::string cache_flag;
    unsigned workers = 1;
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--cache", cache_flag, "cache file path, or 'off'");
    app.add_option("--workers", workers, "scan parallelism")->check(CLI::Range(1u, 256u));
    app.set_version_flag("--version", kVersion);

    const i64 kRangeTop = 1'000'000'000;

    auto* verify = app.add_subcommand("verify", "sweep one divisibility theorem");
    verify->fallthrough();
    std::string verify_theorem;
    i64 v_k_max = 10, v_l_max = 10, v_m_max = 50, v_n_max = 200;
    verify->add_option("--theorem", verify_theorem, "theorem id")
        ->required()
        ->check(CLI::IsMember({"1.1i", "1.1ii", "1.2i", "1.2ii", "1.2iii", "1.3", "1.4",
                               "bober"}));
    verify->add_option("--k-max", v_k_max)->check(CLI::Range(i64{1}, kRangeTop));
    verify->add_option("--l-max", v_l_max)->check(CLI::Range(i64{1}, kRangeTop));
    verify->add_option("--m-max", v_m_max)->check(CLI::Range(i64{0}, kRangeTop));
    verify->add_option("--n-max", v_n_max)->check(CLI::Range(i64{1}, kRangeTop));

    auto* seq_cmd = app.add_subcommand("seq", "emit a named integer sequence");
    seq_cmd->fallthrough();
    std::string seq_id;
    i64 seq_max = 0;
    seq_cmd->add_option("id", seq_id, "catalan | catalan:h | s | t | S:k | Q:m")->required();
    seq_cmd->add_option("--max", seq_max, "emit n = 1..N")
        ->required()
        ->check(CLI::Range(i64{1}, kRangeTop));

    auto* ineq_cmd = app.add_subcommand("ineq", "exhaustive floor-inequality scan");
    ineq_cmd->fallthrough();
    std::string ineq_theorem;
    i64 ineq_m_max = 0;
    ineq_cmd->add_option("--theorem", ineq_theorem, "inequality id")
        ->required()
        ->check(CLI::IsMember({"2.1", "2.2", "2.3i", "2.3ii", "3.3", "L2.1"}));
    ineq_cmd->add_option("--m-max", ineq_m_max, "largest modulus / denominator")
        ->required()
        ->check(CLI::Range(i64{1}, kRangeTop));

    auto* conj_cmd = app.add_subcommand("conjecture", "counterexample scan");
    conj_cmd->fallthrough();
    std::string conj_id;
    i64 c_m_max = -1, c_k_max = -1, c_l_max = -1, c_n_max = -1;
    conj_cmd->add_option("id", conj_id, "conjecture id")
        ->required()
        ->check(CLI::IsMember({"1.1", "1.2", "1.3"}));
    conj_cmd->add_option("--m-max", c_m_max)->check(CLI::Range(i64{2}, kRangeTop));
    conj_cmd->add_option("--k-max", c_k_max)->check(CLI::Range(i64{1}, kRangeTop));
    conj_cmd->add_option("--l-max", c_l_max)->check(CLI::Range(i64{2}, kRangeTop));
    conj_cmd->add_option("--n-max", c_n_max)->check(CLI::Range(i64{1}, kRangeTop));

    auto* fsearch_cmd = app.add_subcommand("fsearch", "least n with (ln+1) not dividing "
                                                      "C(kn+ln, kn)");
    fsearch_cmd->fallthrough();
    i64 f_k = 0, f_l = 0, f_cap = 5000;
    std::string f_pairs;
    fsearch_cmd->add_option("--k", f_k)->check(CLI::Range(i64{1}, kRangeTop));
    fsearch_cmd->add_option("--l", f_l)->check(CLI::Range(i64{1}, kRangeTop));
    fsearch_cmd->add_option("--pairs", f_pairs, "recompute the published table")
        ->check(CLI::IsMember({"paper"}));
    fsearch_cmd->add_option("--cap", f_cap)->check(CLI::Range(i64{1}, kRangeTop));

    auto* ratio_cmd = app.add_subcommand("ratio", "evaluate a factorial-ratio expression");
    ratio_cmd->fallthrough();
    std::string ratio_text, ratio_action = "value";
    i64 ratio_n = 0, ratio_p = 0, ratio_mod = 0;
    ratio_cmd->add_option("spec", ratio_text, "e.g. \"(2n)! / (n)! (n)! [n+1]\"")->required();
    ratio_cmd->add_option("--n", ratio_n, "evaluation point")
        ->required()
        ->check(CLI::Range(i64{1}, kRangeTop));
    ratio_cmd->add_option("--op", ratio_action)
        ->check(CLI::IsMember({"value", "integer", "profile", "nu", "mod", "parity"}));
    ratio_cmd->add_option("--p", ratio_p, "prime, for --op nu")
        ->check(CLI::Range(i64{2}, kRangeTop));
    ratio_cmd->add_option("--mod", ratio_mod, "modulus, for --op mod")
        ->check(CLI::Range(i64{2}, kRangeTop));

    std::vector<const char*> argv;
    argv.push_back("binomdiv");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "binomdiv: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    RunConfig cfg;
    cfg.workers = workers;
    if (cache_flag.empty()) {
        if (const char* env = std::getenv("BINOMDIV_CACHE"); env != nullptr && *env != '\0')
            cfg.cache_path = env;
    } else if (cache_flag != "off") {
        cfg.cache_path = cache_flag;
    }

    try {
        cfg.format = parse_format(format_text);
        ordered_json payload;
        if (verify->parsed()) {
            payload = run_verify(verify_theorem, v_k_max, v_l_max, v_m_max, v_n_max,
                                 cfg.workers);
        } else if (seq_cmd->parsed()) {
            payload = run_seq(seq_id, seq_max);
        } else if (ineq_cmd->parsed()) {
            payload = run_ineq(ineq_theorem, ineq_m_max, cfg.workers);
        } else if (conj_cmd->parsed()) {
            std::string params_key;
            std::function<ordered_json()> compute;
            if (conj_id == "1.1") {
                i64 m_max = c_m_max < 0 ? 16 : c_m_max;
                i64 k_max = c_k_max < 0 ? 8 : c_k_max;
                i64 n_max = c_n_max < 0 ? 10000 : c_n_max;
                params_key = "id=1.1,m_max=" + std::to_string(m_max) +
                             ",k_max=" + std::to_string(k_max) +
                             ",n_max=" + std::to_string(n_max);
                compute = [=] {
                    return scan_payload("1.1",
                                        conj::conj_1_1_scan(m_max, k_max, n_max, cfg.workers));
                };
            } else if (conj_id == "1.2") {
                i64 n_max = c_n_max < 0 ? 300 : c_n_max;
                params_key = "id=1.2,n_max=" + std::to_string(n_max);
                compute = [=] {
                    return scan_payload("1.2", conj::conj_1_2_scan(n_max, cfg.workers));
                };
            } else {
                i64 k_max = c_k_max < 0 ? 8 : c_k_max;
                i64 l_max = c_l_max < 0 ? 8 : c_l_max;
                i64 n_max = c_n_max < 0 ? 100 : c_n_max;
                params_key = "id=1.3,k_max=" + std::to_string(k_max) +
                             ",l_max=" + std::to_string(l_max) +
                             ",n_max=" + std::to_string(n_max);
                compute = [=] {
                    return scan_payload(
                        "1.3", conj::conj_1_3_scan(k_max, l_max, n_max, cfg.workers));
                };
            }
            if (auto hit = cache_lookup(cfg, "conjecture", params_key, err)) {
                payload = *hit;
            } else {
                payload = compute();
                cache_append(cfg, "conjecture", params_key, payload, err);
            }
        } else if (fsearch_cmd->parsed()) {
            bool pairs_mode = !f_pairs.empty();
            bool single_mode = f_k > 0 || f_l > 0;
            if (pairs_mode == single_mode || (single_mode && (f_k == 0 || f_l == 0)))
                throw std::invalid_argument(
                    "fsearch: give either --k K --l L or --pairs paper");
            std::string params_key = pairs_mode
                                         ? "pairs=paper,cap=" + std::to_string(f_cap)
                                         : "k=" + std::to_string(f_k) +
                                               ",l=" + std::to_string(f_l) +
                                               ",cap=" + std::to_string(f_cap);
            if (auto hit = cache_lookup(cfg, "fsearch", params_key, err)) {
                payload = *hit;
            } else {
                payload["op"] = "fsearch";
                if (pairs_mode) payload["pairs"] = "paper";
                else {
                    payload["k"] = f_k;
                    payload["l"] = f_l;
                }
                payload["cap"] = f_cap;
                payload["version"] = kVersion;
                ordered_json results = ordered_json::array();
                if (pairs_mode) {
                    for (const auto& r : conj::f_table(f_cap, cfg.workers))
                        results.push_back(fsearch_result_json(r));
                } else {
                    results.push_back(fsearch_result_json(conj::f_search(f_k, f_l, f_cap)));
                }
                payload["results"] = std::move(results);
                cache_append(cfg, "fsearch", params_key, payload, err);
            }
        } else if (ratio_cmd->parsed()) {
            if (ratio_action == "nu" && ratio_p < 2)
                throw std::invalid_argument("ratio --op nu requires --p");
            if (ratio_action == "mod" && ratio_mod < 2)
                throw std::invalid_argument("ratio --op mod requires --mod");
            payload = run_ratio(ratio_text, ratio_n, ratio_action, ratio_p, ratio_mod);
        }
        emit(payload, cfg.format, out);
        return exit_code_of(payload);
    } catch (const ratio::integrality_error& e) {
        ordered_json payload;
        payload["op"] = "error";
        payload["message"] = e.what();
        payload["violating_prime"] = e.violating_prime();
        emit(payload, cfg.format, out);
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "binomdiv: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "binomdiv: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        err << "binomdiv: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "binomdiv: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // logic_error (broken self-check) or runtime_error (mismatch against
        // published values): structured report on stdout, exit 1.
        ordered_json payload;
        payload["op"] = "error";
        payload["message"] = e.what();
        emit(payload, cfg.format, out);
        return 1;
    }
}

} // namespace binomdiv::cli
