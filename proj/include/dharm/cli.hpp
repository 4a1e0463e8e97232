#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it in-process with captured streams.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// parse error.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reference.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace dharm {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Kind require_kind(const std::string& s) {
    if (auto k = parse_kind(s)) return *k;
    throw UsageError("unknown kind '" + s + "' (expected derangement, harmonic, hyperharmonic, deg-harmonic, deg-hyperharmonic)");
}

inline void check_order_option(Kind kind, const std::optional<unsigned>& r) {
    if (needs_order(kind) && !r) throw UsageError(std::string(kind_name(kind)) + " requires --r");
    if (!needs_order(kind) && r) throw UsageError(std::string(kind_name(kind)) + " takes no --r");
}

inline int cmd_compute(Tables& t, const std::string& kind_text, std::size_t n, const std::optional<unsigned>& r,
                       const std::optional<std::string>& lambda, std::ostream& out) {
    const Kind kind = require_kind(kind_text);
    check_order_option(kind, r);
    const Value v = compute_value(t, kind, n, r.value_or(0));
    if (lambda) {
        if (!is_degenerate(kind)) throw UsageError("--lambda applies only to degenerate kinds");
        out << to_text(std::get<LPoly>(v).eval(parse_rat(*lambda))) << '\n';
    } else {
        out << to_text(v) << '\n';
    }
    return exit_ok;
}

inline int cmd_table(Tables& t, const std::string& kind_text, std::size_t n_max, const std::optional<unsigned>& r,
                     const std::string& format, const std::optional<std::string>& output, std::ostream& out) {
    const Kind kind = require_kind(kind_text);
    check_order_option(kind, r);
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    const ReferenceTable table = make_table(t, kind, n_max, r);
    std::ofstream file;
    if (output) {
        file.open(*output, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + *output + "'");
    }
    std::ostream& dest = output ? static_cast<std::ostream&>(file) : out;
    if (format == "csv")
        write_csv(dest, table);
    else
        write_json(dest, table);
    return exit_ok;
}

inline ReferenceTable load_reference(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_reference_csv(in);
}

inline int cmd_check_reference(Tables& t, const std::string& path, std::ostream& out) {
    const ReferenceTable table = load_reference(path);
    std::size_t failed = 0;
    for (const auto& row : table.rows) {
        const Value actual = compute_value(t, row.kind, row.n, row.r.value_or(0));
        if (actual == row.value) continue;
        ++failed;
        out << "line " << row.line << ": " << kind_name(row.kind) << " n=" << row.n;
        if (row.r) out << " r=" << *row.r;
        out << " expected " << to_text(row.value) << " actual " << to_text(actual) << '\n';
    }
    out << "checked " << table.rows.size() << ", failed " << failed << '\n';
    return failed == 0 ? exit_ok : exit_failed;
}

inline int cmd_verify(Tables& t, VerifyJob job, const std::string& identity_text,
                      const std::vector<std::string>& lambda_texts, const std::optional<std::string>& table_path,
                      unsigned jobs, std::ostream& out) {
    const auto id = parse_identity(identity_text);
    if (!id) throw UsageError("unknown identity '" + identity_text + "'");
    job.identity = *id;
    if (!lambda_texts.empty() && *id != IdentityId::Thm3) throw UsageError("--lambda applies only to thm3");
    for (const auto& s : lambda_texts) job.lambdas.push_back(parse_rat(s));
    if (table_path) apply_overrides(t, load_reference(*table_path));
    const VerifyResult result = run_job(job, t, jobs);
    for (const auto& r : result.reports)
        if (!r.pass) out << r.failure_line() << '\n';
    out << "checked " << result.checked() << ", failed " << result.failed() << '\n';
    return result.failed() == 0 ? exit_ok : exit_failed;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact derangement, harmonic and degenerate harmonic numbers, and verification of their identities",
                 "dharm"};
    app.require_subcommand(1);

    std::string kind, identity;
    std::size_t n = 0;
    std::optional<unsigned> r;
    std::optional<std::string> lambda;
    auto* compute = app.add_subcommand("compute", "Print one exact value");
    compute->add_option("kind", kind, "Sequence kind")->required();
    compute->add_option("n", n, "Index")->required();
    compute->add_option("--r", r, "Order, for the hyperharmonic kinds");
    compute->add_option("--lambda", lambda, "Evaluate a degenerate value at this rational p/q");

    VerifyJob job;
    std::vector<std::string> lambdas;
    std::optional<std::string> table_path;
    unsigned jobs = 0;
    auto* verify = app.add_subcommand("verify", "Run an identity over a parameter grid");
    verify->add_option("identity", identity, "Identity id")->required();
    verify->add_option("--m-max", job.m_max, "Largest m")->capture_default_str();
    verify->add_option("--n-max", job.n_max, "Largest n")->capture_default_str();
    verify->add_option("--r-max", job.r_max, "Largest r (hyperharmonic generating functions)");
    verify->add_option("--order", job.order, "Series truncation order");
    verify->add_option("--lambda", lambdas, "Also check at these rational lambda values (thm3)");
    verify->add_option("--samples", job.samples, "Random triples for eq6")->capture_default_str();
    verify->add_option("--seed", job.seed, "Seed for eq6 sampling")->capture_default_str();
    verify->add_option("--table", table_path, "Reference CSV whose values replace the computed tables");
    verify->add_option("--jobs", jobs, "Worker threads (0 = automatic)");

    std::size_t n_max = 0;
    std::string format = "csv";
    std::optional<std::string> output;
    auto* table = app.add_subcommand("table", "Emit a table of values");
    table->add_option("kind", kind, "Sequence kind")->required();
    table->add_option("n-max", n_max, "Largest index")->required();
    table->add_option("--r", r, "Order, for the hyperharmonic kinds");
    table->add_option("--format", format, "csv or json")->capture_default_str();
    table->add_option("--output,-o", output, "Write to a file instead of stdout");

    std::string ref_path;
    auto* check_ref = app.add_subcommand("check-reference", "Recompute and compare a reference CSV");
    check_ref->add_option("path", ref_path, "CSV file with header kind,n,r,value")->required();

    std::vector<const char*> argv;
    argv.push_back("dharm");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        Tables t;
        if (*compute) return detail::cmd_compute(t, kind, n, r, lambda, out);
        if (*verify) return detail::cmd_verify(t, job, identity, lambdas, table_path, jobs, out);
        if (*table) return detail::cmd_table(t, kind, n_max, r, format, output, out);
        if (*check_ref) return detail::cmd_check_reference(t, ref_path, out);
    } catch (const TableParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NonDivisible& e) {
        err << "verification failure: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}

}  // namespace dharm
