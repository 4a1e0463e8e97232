#pragma once

// Verification jobs: expansion of an identity and parameter ranges into the
// full grid of checks, and a bounded worker pool that runs them. Results are
// always returned in grid order, whatever order the workers finish in.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "identities.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "series.hpp"

namespace dharm {

struct VerifyJob {
    IdentityId identity = IdentityId::Thm1;
    unsigned m_max = 10;
    unsigned n_max = 10;
    std::optional<unsigned> r_max;
    std::optional<unsigned> order;
    /// Extra rational specializations; used by thm3 only.
    std::vector<Rat> lambdas;
    /// eq6 draws this many random (x, y, lambda) triples.
    unsigned samples = 200;
    std::uint64_t seed = 1;
};

/// Truncation orders used when a job does not set one.
inline unsigned default_order(IdentityId id) {
    switch (id) {
        case IdentityId::GfDerangement:
        case IdentityId::GfHarmonic:
        case IdentityId::GfHyperharmonic: return 60;
        case IdentityId::GfDegHarmonic:
        case IdentityId::GfDegHyperharmonic: return 40;
        case IdentityId::BivThm1:
        case IdentityId::BivThm2: return 20;
        case IdentityId::BivThm3: return 12;
        default: return 0;
    }
}

inline unsigned default_r_max(IdentityId id) { return id == IdentityId::GfDegHyperharmonic ? 4 : 5; }

struct Eq6Sample {
    Rat x, y;
    long lambda;
};

/// Deterministic (x, y, lambda) triples: x, y rational in (0, 10] with
/// denominators up to 12, lambda an integer in [-5, 5] without 0.
inline std::vector<Eq6Sample> eq6_samples(unsigned count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(1, 12);
    std::uniform_int_distribution<long> lam_dist(1, 10);
    auto draw = [&] {
        const long den = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(1, 10 * den);
        Rat q(num_dist(rng), den);
        q.canonicalize();
        return q;
    };
    std::vector<Eq6Sample> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        Rat x = draw();
        Rat y = draw();
        const long k = lam_dist(rng);
        out.push_back({std::move(x), std::move(y), k <= 5 ? k - 6 : k - 5});
    }
    return out;
}

using CheckTask = std::function<CheckReport()>;

inline std::vector<CheckTask> expand(const VerifyJob& job, Tables& t) {
    std::vector<CheckTask> tasks;
    const unsigned M = job.m_max, N = job.n_max;
    auto grid = [&](auto check) {
        for (unsigned m = 0; m <= M; ++m)
            for (unsigned n = 0; n <= N; ++n) tasks.push_back([&t, check, m, n] { return check(t, m, n); });
    };
    const unsigned order = job.order.value_or(default_order(job.identity));
    const unsigned r_max = job.r_max.value_or(default_r_max(job.identity));
    switch (job.identity) {
        case IdentityId::Thm1: grid([](Tables& tt, unsigned m, unsigned n) { return thm1_check(tt, m, n); }); break;
        case IdentityId::Thm2: grid([](Tables& tt, unsigned m, unsigned n) { return thm2_check(tt, m, n); }); break;
        case IdentityId::Thm3:
            grid([](Tables& tt, unsigned m, unsigned n) { return thm3_check(tt, m, n); });
            for (const Rat& lam : job.lambdas)
                for (unsigned m = 0; m <= M; ++m)
                    for (unsigned n = 0; n <= N; ++n) tasks.push_back([lam, m, n] { return thm3_check_at(m, n, lam); });
            break;
        case IdentityId::Eq10: grid([](Tables& tt, unsigned m, unsigned n) { return eq10_check(tt, n, m); }); break;
        case IdentityId::CorHyper:
            grid([](Tables& tt, unsigned m, unsigned n) { return corollary_hyperharmonic_check(tt, n, m); });
            break;
        case IdentityId::Eq13: grid([](Tables& tt, unsigned m, unsigned n) { return eq13_check(tt, n, m); }); break;
        case IdentityId::CorDegHyper:
            grid([](Tables& tt, unsigned m, unsigned n) { return eq13_corollary_check(tt, n, m); });
            break;
        case IdentityId::Eq6:
            for (auto& s : eq6_samples(job.samples, job.seed))
                tasks.push_back([s] { return eq6_check(s.x, s.y, s.lambda); });
            break;
        case IdentityId::GfDerangement: tasks.push_back([&t, order] { return gf_derangement_check(t, order); }); break;
        case IdentityId::GfHarmonic: tasks.push_back([&t, order] { return gf_harmonic_check(t, order); }); break;
        case IdentityId::GfHyperharmonic:
            for (unsigned r = 0; r <= r_max; ++r)
                tasks.push_back([&t, order, r] { return gf_hyperharmonic_check(t, order, r); });
            break;
        case IdentityId::GfDegHarmonic: tasks.push_back([&t, order] { return gf_deg_harmonic_check(t, order); }); break;
        case IdentityId::GfDegHyperharmonic:
            for (unsigned r = 0; r <= r_max; ++r)
                tasks.push_back([&t, order, r] { return gf_deg_hyperharmonic_check(t, order, r); });
            break;
        case IdentityId::BivThm1: tasks.push_back([&t, order] { return bivariate_thm1_check(t, order); }); break;
        case IdentityId::BivThm2: tasks.push_back([&t, order] { return bivariate_thm2_check(t, order); }); break;
        case IdentityId::BivThm3: tasks.push_back([&t, order] { return bivariate_thm3_check(t, order); }); break;
    }
    return tasks;
}

struct VerifyResult {
    std::vector<CheckReport> reports;
    std::size_t checked() const { return reports.size(); }
    std::size_t failed() const {
        return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
    }
};

/// 0 picks min(hardware threads, 8).
inline VerifyResult run_tasks(const std::vector<CheckTask>& tasks, unsigned workers = 0) {
    if (workers == 0) workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
    std::vector<std::optional<CheckReport>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mu;
    std::exception_ptr error;
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                slots[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                next = tasks.size();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    VerifyResult out;
    out.reports.reserve(slots.size());
    for (auto& s : slots) out.reports.push_back(std::move(*s));
    return out;
}

inline VerifyResult run_job(const VerifyJob& job, Tables& t, unsigned workers = 0) {
    return run_tasks(expand(job, t), workers);
}

}  // namespace dharm
