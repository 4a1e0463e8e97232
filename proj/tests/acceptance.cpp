// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <dharm/cli.hpp>
#include <dharm/identities.hpp>
#include <dharm/series.hpp>
#include <dharm/verify.hpp>

namespace {

using namespace dharm;
using Clock = std::chrono::steady_clock;

constexpr double thm1_limit_s = 60;
constexpr double thm2_limit_s = 60;
constexpr double thm3_limit_s = 120;
constexpr unsigned eq6_samples_count = 200;
constexpr std::uint64_t eq6_seed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome from_result(const VerifyResult& r) {
    Outcome o;
    o.pass = r.failed() == 0;
    o.detail = std::to_string(r.checked()) + " checks, " + std::to_string(r.failed()) + " failed";
    for (const auto& rep : r.reports)
        if (!rep.pass) {
            o.detail += "; first: " + rep.failure_line();
            break;
        }
    return o;
}

Outcome grid(IdentityId id, unsigned m_max, unsigned n_max) {
    VerifyJob job;
    job.identity = id;
    job.m_max = m_max;
    job.n_max = n_max;
    return from_result(run_job(job, default_tables()));
}

Outcome timed(Outcome o, Clock::time_point start, double limit_s) {
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2f s (limit %.0f s)", s, limit_s);
    o.detail += buf;
    if (s >= limit_s) o.pass = false;
    return o;
}

void merge(Outcome& into, const Outcome& o, const std::string& label) {
    into.pass = into.pass && o.pass;
    if (!into.detail.empty()) into.detail += "; ";
    into.detail += label + ": " + o.detail;
}

void merge(Outcome& into, const CheckReport& r) {
    into.pass = into.pass && r.pass;
    if (!r.pass) {
        if (!into.detail.empty()) into.detail += "; ";
        into.detail += r.failure_line();
    }
}

Outcome criterion_thm1() {
    const auto start = Clock::now();
    return timed(grid(IdentityId::Thm1, 40, 40), start, thm1_limit_s);
}

Outcome criterion_thm2() {
    const auto start = Clock::now();
    return timed(grid(IdentityId::Thm2, 200, 200), start, thm2_limit_s);
}

Outcome criterion_thm3() {
    const auto start = Clock::now();
    return timed(grid(IdentityId::Thm3, 40, 40), start, thm3_limit_s);
}

Outcome criterion_closed_forms() {
    Outcome o;
    merge(o, grid(IdentityId::Eq10, 10, 100), "eq10");
    merge(o, grid(IdentityId::Eq13, 40, 40), "eq13");
    merge(o, grid(IdentityId::CorDegHyper, 40, 40), "eq13-corollary");
    return o;
}

Outcome criterion_corollary() { return grid(IdentityId::CorHyper, 10, 100); }

Outcome criterion_generating_functions() {
    Outcome o;
    std::size_t count = 0;
    merge(o, gf_derangement_check(60));
    merge(o, gf_harmonic_check(200));
    merge(o, gf_deg_harmonic_check(60));
    count += 3;
    for (unsigned r = 0; r <= 5; ++r, ++count) merge(o, gf_hyperharmonic_check(100, r));
    for (unsigned r = 0; r <= 4; ++r, ++count) merge(o, gf_deg_hyperharmonic_check(40, r));
    if (o.pass) o.detail = std::to_string(count) + " series compared, 0 mismatches";
    return o;
}

Outcome criterion_bivariate() {
    Outcome o;
    merge(o, bivariate_thm1_check(20));
    merge(o, bivariate_thm2_check(20));
    merge(o, bivariate_thm3_check(12));
    if (o.pass) o.detail = "orders 20, 20, 12";
    return o;
}

// Oracles here are written out again rather than shared with the unit tests.
Outcome criterion_derangement_oracles() {
    Outcome o;
    const auto d8 = derangements(8);
    std::vector<int> p(8);
    for (std::size_t n = 0; n <= 8; ++n) {
        p.resize(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
        unsigned long count = 0;
        do {
            bool fixed = false;
            for (std::size_t i = 0; i < n; ++i) fixed = fixed || p[i] == static_cast<int>(i);
            if (!fixed) ++count;
        } while (std::next_permutation(p.begin(), p.end()));
        if (d8[n] != count) {
            o.pass = false;
            o.detail += "enumeration mismatch at n=" + std::to_string(n) + "; ";
        }
    }
    const auto d = derangements(200);
    Int prev = 1;
    for (std::size_t n = 1; n <= 200; ++n) {
        Int next = prev * static_cast<unsigned long>(n);
        next += n % 2 == 0 ? 1 : -1;
        if (d[n] != next) {
            o.pass = false;
            o.detail += "recurrence mismatch at n=" + std::to_string(n) + "; ";
            break;
        }
        prev = next;
    }
    if (o.pass) o.detail = "n<=8 by enumeration, n<=200 by recurrence (D_200 has " +
                           std::to_string(d[200].get_str().size()) + " digits)";
    return o;
}

Outcome criterion_degeneration() {
    Outcome o;
    Tables& t = default_tables();
    for (std::size_t n = 0; n <= 60; ++n)
        if (t.deg_harmonic(n).constant_term() != t.harmonic(n)) {
            o.pass = false;
            o.detail += "deg-harmonic n=" + std::to_string(n) + "; ";
        }
    for (unsigned r = 0; r <= 4; ++r)
        for (std::size_t n = 0; n <= 40; ++n)
            if (t.deg_hyperharmonic(n, r).constant_term() != t.hyperharmonic(n, r)) {
                o.pass = false;
                o.detail += "deg-hyperharmonic n=" + std::to_string(n) + " r=" + std::to_string(r) + "; ";
            }
    if (o.pass) o.detail = "61 + 205 constant terms";
    return o;
}

Outcome criterion_eq6() {
    VerifyJob job;
    job.identity = IdentityId::Eq6;
    job.samples = eq6_samples_count;
    job.seed = eq6_seed;
    Outcome o = from_result(run_job(job, default_tables()));
    for (const auto& s : eq6_samples(eq6_samples_count, eq6_seed))
        if (s.x <= 0 || s.x > 10 || s.y <= 0 || s.y > 10 || s.lambda == 0 || s.lambda < -5 || s.lambda > 5) {
            o.pass = false;
            o.detail += "; sample out of range";
            break;
        }
    return o;
}

int cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return run_cli(args, out, err);
}

Outcome criterion_cli() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("dharm_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::vector<std::vector<std::string>> kinds = {
        {"derangement"}, {"harmonic"}, {"deg-harmonic"}, {"hyperharmonic", "--r", "3"}, {"deg-hyperharmonic", "--r", "3"},
    };
    for (const auto& k : kinds) {
        const auto path = (dir / (k[0] + ".csv")).string();
        std::vector<std::string> args = {"table", k[0], "50", "-o", path};
        args.insert(args.end(), k.begin() + 1, k.end());
        const int made = cli(args);
        const int checked = cli({"check-reference", path});
        if (made != 0 || checked != 0) {
            o.pass = false;
            o.detail += k[0] + " round trip exit " + std::to_string(checked) + "; ";
        }
    }
    std::filesystem::remove_all(dir);
    const std::string data = DHARM_TEST_DATA;
    const int corrupted = cli({"check-reference", data + "/corrupted_harmonic.csv"});
    const int malformed = cli({"check-reference", data + "/malformed.csv"});
    o.pass = o.pass && corrupted == 1 && malformed == 2;
    o.detail += "round trip 5 kinds n<=50, corrupted exit " + std::to_string(corrupted) + ", malformed exit " +
                std::to_string(malformed);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 thm1 sweep 0<=m,n<=40", criterion_thm1},
        {"2 thm2 sweep 0<=m,n<=200", criterion_thm2},
        {"3 thm3 sweep 0<=m,n<=40", criterion_thm3},
        {"4 closed forms eq10, eq13, eq13-corollary", criterion_closed_forms},
        {"5 hyperharmonic corollary n<=100, m<=10", criterion_corollary},
        {"6 generating functions", criterion_generating_functions},
        {"7 bivariate derivations", criterion_bivariate},
        {"8 derangement oracles", criterion_derangement_oracles},
        {"9 degeneration at lambda=0", criterion_degeneration},
        {"10 degenerate logarithm addition, 200 samples", criterion_eq6},
        {"11 CLI contract", criterion_cli},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << ")" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
