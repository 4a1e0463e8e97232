#pragma once

// Derangement, harmonic, hyperharmonic and degenerate (lambda-deformed)
// harmonic / hyperharmonic numbers, each built from its defining formula.
//
// The free functions build a fresh table per call. Tables memoizes every
// family behind a shared mutex so identity sweeps can read concurrently.

#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "exact.hpp"

namespace dharm {

enum class Kind { Derangement, Harmonic, Hyperharmonic, DegHarmonic, DegHyperharmonic };

inline std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::Derangement: return "derangement";
        case Kind::Harmonic: return "harmonic";
        case Kind::Hyperharmonic: return "hyperharmonic";
        case Kind::DegHarmonic: return "deg-harmonic";
        case Kind::DegHyperharmonic: return "deg-hyperharmonic";
    }
    return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
    for (Kind k : {Kind::Derangement, Kind::Harmonic, Kind::Hyperharmonic, Kind::DegHarmonic,
                   Kind::DegHyperharmonic})
        if (kind_name(k) == s) return k;
    return std::nullopt;
}

inline bool needs_order(Kind k) { return k == Kind::Hyperharmonic || k == Kind::DegHyperharmonic; }
inline bool is_degenerate(Kind k) { return k == Kind::DegHarmonic || k == Kind::DegHyperharmonic; }

/// Entries 0..N of one family. r is set only for the hyperharmonic kinds.
template <class V>
struct SequenceTable {
    Kind kind;
    std::optional<unsigned> r;
    std::vector<V> values;

    const V& operator[](std::size_t n) const { return values.at(n); }
    std::size_t size() const { return values.size(); }
};

namespace detail {

/// n! * sum_{k<=n} (-1)^k / k!, evaluated in integers as sum_k (-1)^k n!/k!.
inline Int derangement_by_definition(unsigned long n) {
    Int sum = 0;
    Int tail = 1;  // n!/k!, walking k downward from n
    for (unsigned long k = n + 1; k-- > 0;) {
        if (k % 2 == 0)
            sum += tail;
        else
            sum -= tail;
        tail *= k;
    }
    return sum;
}

/// (-1)^{n-1} binom(lambda, n) / lambda for n >= 1; zero at n = 0.
inline LPoly deg_base_term(unsigned long n) {
    if (n == 0) return {};
    LPoly q = lpoly_exact_div(lpoly_binomial(LPoly::lambda(), n), LPoly::lambda());
    return n % 2 == 1 ? q : -q;
}

}  // namespace detail

inline SequenceTable<Int> derangements(std::size_t N) {
    SequenceTable<Int> t{Kind::Derangement, std::nullopt, {}};
    t.values.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) t.values.push_back(detail::derangement_by_definition(n));
    return t;
}

inline SequenceTable<Rat> harmonics(std::size_t N) {
    SequenceTable<Rat> t{Kind::Harmonic, std::nullopt, {}};
    t.values.reserve(N + 1);
    Rat acc = 0;
    t.values.push_back(acc);
    for (std::size_t n = 1; n <= N; ++n) {
        acc += Rat(1, n);
        t.values.push_back(acc);
    }
    return t;
}

/// Hyperharmonic numbers: H_0^(r) = 0, H_n^(0) = 1/n, H_n^(r) = sum_{k<=n} H_k^(r-1).
inline Rat hyperharmonic(std::size_t n, unsigned r) {
    if (n == 0) return 0;
    std::vector<Rat> row(n + 1);
    for (std::size_t k = 1; k <= n; ++k) row[k] = Rat(1, k);
    for (unsigned level = 1; level <= r; ++level)
        for (std::size_t k = 1; k <= n; ++k) row[k] += row[k - 1];
    return row[n];
}

inline SequenceTable<LPoly> degenerate_harmonics(std::size_t N) {
    SequenceTable<LPoly> t{Kind::DegHarmonic, std::nullopt, {}};
    t.values.reserve(N + 1);
    LPoly acc;
    t.values.push_back(acc);
    // binom(lambda, k) built incrementally as binom(lambda, k-1) (lambda - k + 1)/k
    LPoly binom(1L);
    for (std::size_t k = 1; k <= N; ++k) {
        binom = binom * (LPoly::lambda() - LPoly(static_cast<long>(k) - 1)) * Rat(1, k);
        LPoly term = lpoly_exact_div(binom, LPoly::lambda());
        if (k % 2 == 0) term = -term;
        acc += term;
        t.values.push_back(acc);
    }
    return t;
}

/// Degenerate hyperharmonic numbers, by the partial-sum recursion over the
/// degenerate base sequence (-1)^{n-1} binom(lambda, n)/lambda.
inline LPoly degenerate_hyperharmonic(std::size_t n, unsigned r) {
    if (n == 0) return {};
    std::vector<LPoly> row(n + 1);
    for (std::size_t k = 1; k <= n; ++k) row[k] = detail::deg_base_term(k);
    for (unsigned level = 1; level <= r; ++level)
        for (std::size_t k = 1; k <= n; ++k) row[k] += row[k - 1];
    return row[n];
}

/// Memoized, append-only tables for all five families. Accessors return
/// references that stay valid for the lifetime of the Tables object.
///
/// Individual entries may be overridden (fault injection, or verifying
/// against externally supplied tables); overrides affect reads only, never
/// the recursions that extend the tables.
class Tables {
public:
    Tables() = default;
    Tables(const Tables&) = delete;
    Tables& operator=(const Tables&) = delete;

    const Int& derangement(std::size_t n) const {
        if (auto* o = find_override(int_over_, Kind::Derangement, n, 0)) return *o;
        return get(d_, n, [this](std::size_t k) { extend_derangements(k); });
    }
    const Rat& harmonic(std::size_t n) const {
        if (auto* o = find_override(rat_over_, Kind::Harmonic, n, 0)) return *o;
        return get(h_, n, [this](std::size_t k) { extend_harmonics(k); });
    }
    const Rat& hyperharmonic(std::size_t n, unsigned r) const {
        if (auto* o = find_override(rat_over_, Kind::Hyperharmonic, n, r)) return *o;
        {
            std::shared_lock lock(mu_);
            if (auto it = hh_.find(r); it != hh_.end() && it->second.size() > n) return it->second[n];
        }
        std::unique_lock lock(mu_);
        return extend_hyper(n, r)[n];
    }
    const LPoly& deg_harmonic(std::size_t n) const {
        if (auto* o = find_override(poly_over_, Kind::DegHarmonic, n, 0)) return *o;
        return get(dh_, n, [this](std::size_t k) { extend_deg_harmonics(k); });
    }
    const LPoly& deg_hyperharmonic(std::size_t n, unsigned r) const {
        if (auto* o = find_override(poly_over_, Kind::DegHyperharmonic, n, r)) return *o;
        {
            std::shared_lock lock(mu_);
            if (auto it = dhh_.find(r); it != dhh_.end() && it->second.size() > n) return it->second[n];
        }
        std::unique_lock lock(mu_);
        return extend_deg_hyper(n, r)[n];
    }

    /// Integer-valued override, for derangements.
    void override_value(Kind k, std::size_t n, unsigned r, const Int& v) {
        std::unique_lock lock(mu_);
        int_over_[{k, n, norm_r(k, r)}] = v;
    }
    void override_value(Kind k, std::size_t n, unsigned r, const Rat& v) {
        std::unique_lock lock(mu_);
        rat_over_[{k, n, norm_r(k, r)}] = v;
    }
    void override_value(Kind k, std::size_t n, unsigned r, const LPoly& v) {
        std::unique_lock lock(mu_);
        poly_over_[{k, n, norm_r(k, r)}] = v;
    }

private:
    using Key = std::tuple<Kind, std::size_t, unsigned>;

    static unsigned norm_r(Kind k, unsigned r) { return needs_order(k) ? r : 0; }

    template <class V>
    const V* find_override(const std::map<Key, V>& m, Kind k, std::size_t n, unsigned r) const {
        std::shared_lock lock(mu_);
        if (m.empty()) return nullptr;
        auto it = m.find({k, n, r});
        return it == m.end() ? nullptr : &it->second;
    }

    template <class V, class Extend>
    const V& get(const std::deque<V>& d, std::size_t n, Extend&& extend) const {
        {
            std::shared_lock lock(mu_);
            if (d.size() > n) return d[n];
        }
        std::unique_lock lock(mu_);
        extend(n);
        return d[n];
    }

    // The extend_* helpers require mu_ held exclusively.
    void extend_derangements(std::size_t n) const {
        // D_k = sum_j (-1)^j k!/j! satisfies D_k = k D_{k-1} + (-1)^k, but the
        // definition is kept so the classical recurrence remains an independent check.
        while (d_.size() <= n) d_.push_back(detail::derangement_by_definition(d_.size()));
    }
    void extend_harmonics(std::size_t n) const {
        if (h_.empty()) h_.emplace_back(0);
        while (h_.size() <= n) {
            Rat next = h_.back() + Rat(1, h_.size());
            h_.push_back(std::move(next));
        }
    }
    void extend_deg_harmonics(std::size_t n) const {
        if (dh_.empty()) dh_.emplace_back();
        while (dh_.size() <= n) {
            const std::size_t k = dh_.size();
            // binom(lambda-1, k-1) (-1)^{k-1} / k, the second form of the definition
            LPoly term = lpoly_binomial(LPoly::affine(-1, 1), k - 1) * Rat(1, k);
            if (k % 2 == 0) term = -term;
            dh_.push_back(dh_.back() + term);
        }
    }
    const std::deque<Rat>& extend_hyper(std::size_t n, unsigned r) const {
        auto& row = hh_[r];
        if (row.size() > n) return row;
        if (row.empty()) row.emplace_back(0);
        if (r == 0) {
            while (row.size() <= n) row.emplace_back(1, row.size());
            return row;
        }
        const auto& below = extend_hyper(n, r - 1);
        while (row.size() <= n) {
            Rat next = row.back() + below[row.size()];
            row.push_back(std::move(next));
        }
        return row;
    }
    const std::deque<LPoly>& extend_deg_hyper(std::size_t n, unsigned r) const {
        auto& row = dhh_[r];
        if (row.size() > n) return row;
        if (row.empty()) row.emplace_back();
        if (r == 0) {
            while (row.size() <= n) row.push_back(detail::deg_base_term(row.size()));
            return row;
        }
        const auto& below = extend_deg_hyper(n, r - 1);
        while (row.size() <= n) row.push_back(row.back() + below[row.size()]);
        return row;
    }

    mutable std::shared_mutex mu_;
    mutable std::deque<Int> d_;
    mutable std::deque<Rat> h_;
    mutable std::map<unsigned, std::deque<Rat>> hh_;
    mutable std::deque<LPoly> dh_;
    mutable std::map<unsigned, std::deque<LPoly>> dhh_;
    std::map<Key, Int> int_over_;
    std::map<Key, Rat> rat_over_;
    std::map<Key, LPoly> poly_over_;
};

/// Process-wide memo shared by the convenience overloads of the checks.
inline Tables& default_tables() {
    static Tables t;
    return t;
}

}  // namespace dharm
