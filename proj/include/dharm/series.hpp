#pragma once

// Truncated formal power series in one variable (t) and two variables (x, y)
// over an exact coefficient ring, plus the generating-function checks built
// on them.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "identities.hpp"
#include "report.hpp"
#include "sequences.hpp"

namespace dharm {

/// Ring of a product of coefficients: LPoly absorbs Rat.
template <class A, class B>
using product_ring_t = std::conditional_t<std::is_same_v<A, LPoly> || std::is_same_v<B, LPoly>, LPoly, Rat>;

/// Coefficients of t^0..t^order; all arithmetic is modulo t^{order+1}.
template <class R>
class Series1 {
public:
    explicit Series1(std::size_t order) : c_(order + 1) {}
    Series1(std::size_t order, std::vector<R> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    std::size_t order() const { return c_.size() - 1; }
    const R& operator[](std::size_t n) const { return c_.at(n); }
    R& operator[](std::size_t n) { return c_.at(n); }
    std::span<const R> coeffs() const { return c_; }

    Series1 truncate(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("Series1::truncate: cannot raise order");
        return Series1(order, std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    Series1& operator+=(const Series1& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series1& operator-=(const Series1& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
    friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
    friend bool operator==(const Series1& a, const Series1& b) { return a.c_ == b.c_; }

private:
    void shrink_to(std::size_t order) {
        if (order < this->order()) c_.resize(order + 1);
    }

    std::vector<R> c_;
};

/// Cauchy product truncated at the smaller of the two orders.
template <class A, class B>
Series1<product_ring_t<A, B>> operator*(const Series1<A>& a, const Series1<B>& b) {
    using R = product_ring_t<A, B>;
    const std::size_t N = std::min(a.order(), b.order());
    Series1<R> out(N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (a[i] == A{}) continue;
        for (std::size_t j = 0; i + j <= N; ++j) out[i + j] += R(a[i] * b[j]);
    }
    return out;
}

/// Coefficients c(i, j) of x^i y^j for i + j <= order; arithmetic is modulo
/// total degree order + 1. Stored as a dense triangle, row i holding j = 0..order-i.
template <class R>
class Series2 {
public:
    explicit Series2(std::size_t order) : order_(order), c_((order + 1) * (order + 2) / 2) {}

    std::size_t order() const { return order_; }
    const R& at(std::size_t i, std::size_t j) const { return c_.at(index(i, j)); }
    R& at(std::size_t i, std::size_t j) { return c_.at(index(i, j)); }

    template <class F>
    static Series2 from_fn(std::size_t order, F&& f) {
        Series2 s(order);
        for (std::size_t i = 0; i <= order; ++i)
            for (std::size_t j = 0; i + j <= order; ++j) s.at(i, j) = R(f(i, j));
        return s;
    }

    Series2 truncate(std::size_t order) const {
        if (order > order_) throw std::invalid_argument("Series2::truncate: cannot raise order");
        return from_fn(order, [this](std::size_t i, std::size_t j) { return at(i, j); });
    }

    Series2& operator+=(const Series2& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series2& operator-=(const Series2& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
    friend bool operator==(const Series2& a, const Series2& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i + j > order_) throw std::out_of_range("Series2: total degree exceeds order");
        return i * (order_ + 1) - i * (i - 1) / 2 + j;
    }
    void require_same_order(const Series2& o) const {
        if (o.order_ != order_) throw std::invalid_argument("Series2: order mismatch");
    }

    std::size_t order_;
    std::vector<R> c_;
};

template <class A, class B>
Series2<product_ring_t<A, B>> operator*(const Series2<A>& a, const Series2<B>& b) {
    using R = product_ring_t<A, B>;
    if (a.order() != b.order()) throw std::invalid_argument("Series2: order mismatch");
    const std::size_t N = a.order();
    Series2<R> out(N);
    for (std::size_t i1 = 0; i1 <= N; ++i1)
        for (std::size_t j1 = 0; i1 + j1 <= N; ++j1) {
            const A& f = a.at(i1, j1);
            if (f == A{}) continue;
            for (std::size_t i2 = 0; i1 + j1 + i2 <= N; ++i2)
                for (std::size_t j2 = 0; i1 + j1 + i2 + j2 <= N; ++j2) out.at(i1 + i2, j1 + j2) += R(f * b.at(i2, j2));
        }
    return out;
}

// ---- univariate constructors ----

/// 1/(1-t)
inline Series1<Rat> geometric(std::size_t N) {
    Series1<Rat> s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = 1;
    return s;
}

/// (1/(1-t))^r, coefficient n = binom(n+r-1, n)
inline Series1<Rat> pow_inv_one_minus_t(unsigned r, std::size_t N) {
    Series1<Rat> s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = Rat(int_binomial(static_cast<long>(n + r) - 1, n));
    return s;
}

/// log(1/(1-t)) = sum_{n>=1} t^n/n
inline Series1<Rat> log_inv_one_minus_t(std::size_t N) {
    Series1<Rat> s(N);
    for (std::size_t n = 1; n <= N; ++n) s[n] = Rat(1, n);
    return s;
}

/// e^{-t}
inline Series1<Rat> exp_neg_t(std::size_t N) {
    Series1<Rat> s(N);
    for (std::size_t n = 0; n <= N; ++n) {
        Rat c(Int(1), factorial(n));
        s[n] = n % 2 == 0 ? c : Rat(-c);
    }
    return s;
}

/// (1-t)^lambda, coefficient n = (-1)^n binom(lambda, n)
inline Series1<LPoly> one_minus_t_pow_lambda(std::size_t N) {
    Series1<LPoly> s(N);
    for (std::size_t n = 0; n <= N; ++n) {
        LPoly c = lpoly_binomial(LPoly::lambda(), n);
        s[n] = n % 2 == 0 ? c : -c;
    }
    return s;
}

/// log_{-lambda}(1/(1-t)) = (1 - (1-t)^lambda)/lambda, divided coefficientwise.
inline Series1<LPoly> deg_log_series(std::size_t N) {
    Series1<LPoly> one(N);
    one[0] = LPoly(1L);
    const Series1<LPoly> numer = one - one_minus_t_pow_lambda(N);
    Series1<LPoly> s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = lpoly_exact_div(numer[n], LPoly::lambda());
    return s;
}

// ---- bivariate constructors ----

/// 1/(1-x-y), c(i, j) = binom(i+j, i)
inline Series2<Rat> inv_one_minus_x_minus_y(std::size_t N) {
    return Series2<Rat>::from_fn(N, [](std::size_t i, std::size_t j) { return Rat(int_binomial(i + j, i)); });
}

/// e^{-(x+y)}, c(i, j) = (-1)^{i+j}/(i! j!)
inline Series2<Rat> exp_neg_x_plus_y(std::size_t N) {
    return Series2<Rat>::from_fn(N, [](std::size_t i, std::size_t j) {
        Rat c(Int(1), factorial(i) * factorial(j));
        return (i + j) % 2 == 0 ? c : Rat(-c);
    });
}

/// log(1/(1-x-y)) = sum_k (x+y)^k/k, c(i, j) = binom(i+j, i)/(i+j)
inline Series2<Rat> log_inv_one_minus_x_minus_y(std::size_t N) {
    return Series2<Rat>::from_fn(N, [](std::size_t i, std::size_t j) {
        if (i + j == 0) return Rat(0);
        Rat c(int_binomial(i + j, i), Int(static_cast<unsigned long>(i + j)));
        c.canonicalize();
        return c;
    });
}

/// (1-x-y)^lambda, c(i, j) = (-1)^{i+j} binom(lambda, i+j) binom(i+j, i)
inline Series2<LPoly> one_minus_x_minus_y_pow_lambda(std::size_t N) {
    std::vector<LPoly> by_degree(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        by_degree[k] = lpoly_binomial(LPoly::lambda(), k);
        if (k % 2 == 1) by_degree[k] = -by_degree[k];
    }
    return Series2<LPoly>::from_fn(N, [&](std::size_t i, std::size_t j) { return by_degree[i + j] * int_binomial(i + j, i); });
}

// ---- generating-function checks ----

namespace detail {

/// Compares coefficients 0..N of a series against expected(n). On failure the
/// report holds the first mismatch; on success the top coefficient.
template <class R, class Expected>
CheckReport compare_series(IdentityId id, CheckParams params, const Series1<R>& s, Expected&& expected) {
    for (std::size_t n = 0; n <= s.order(); ++n) {
        const R want = expected(n);
        if (!(s[n] == want)) {
            CheckReport r = make_report(id, params, want, s[n]);
            r.pass = false;
            r.first_diff = n;
            r.note = "coefficient mismatch";
            return r;
        }
    }
    const std::size_t N = s.order();
    return make_report(id, std::move(params), R(expected(N)), s[N]);
}

template <class R, class Expected>
CheckReport compare_series2(IdentityId id, CheckParams params, const Series2<R>& s, Expected&& expected,
                            std::string_view route) {
    const std::size_t N = s.order();
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j <= N; ++j) {
            const R want = expected(i, j);
            if (!(s.at(i, j) == want)) {
                CheckReport r = make_report(id, params, want, s.at(i, j));
                r.pass = false;
                r.note = "coefficient x^" + std::to_string(i) + " y^" + std::to_string(j) + " differs from " +
                         std::string(route);
                return r;
            }
        }
    return make_report(id, std::move(params), R(expected(0, N)), s.at(0, N));
}

}  // namespace detail

/// n! [t^n] e^{-t}/(1-t) = D_n
inline CheckReport gf_derangement_check(Tables& t, std::size_t N) {
    const Series1<Rat> gf = geometric(N) * exp_neg_t(N);
    Series1<Rat> scaled(N);
    for (std::size_t n = 0; n <= N; ++n) scaled[n] = gf[n] * factorial(n);
    return detail::compare_series(IdentityId::GfDerangement, {.order = static_cast<unsigned>(N)}, scaled,
                                  [&t](std::size_t n) { return Rat(t.derangement(n)); });
}

inline CheckReport gf_harmonic_check(Tables& t, std::size_t N) {
    return detail::compare_series(IdentityId::GfHarmonic, {.order = static_cast<unsigned>(N)},
                                  geometric(N) * log_inv_one_minus_t(N),
                                  [&t](std::size_t n) { return t.harmonic(n); });
}

inline CheckReport gf_hyperharmonic_check(Tables& t, std::size_t N, unsigned r) {
    return detail::compare_series(IdentityId::GfHyperharmonic, {.r = r, .order = static_cast<unsigned>(N)},
                                  pow_inv_one_minus_t(r, N) * log_inv_one_minus_t(N),
                                  [&t, r](std::size_t n) { return t.hyperharmonic(n, r); });
}

inline CheckReport gf_deg_harmonic_check(Tables& t, std::size_t N) {
    return detail::compare_series(IdentityId::GfDegHarmonic, {.order = static_cast<unsigned>(N)},
                                  geometric(N) * deg_log_series(N),
                                  [&t](std::size_t n) { return t.deg_harmonic(n); });
}

inline CheckReport gf_deg_hyperharmonic_check(Tables& t, std::size_t N, unsigned r) {
    return detail::compare_series(IdentityId::GfDegHyperharmonic, {.r = r, .order = static_cast<unsigned>(N)},
                                  pow_inv_one_minus_t(r, N) * deg_log_series(N),
                                  [&t, r](std::size_t n) { return t.deg_hyperharmonic(n, r); });
}

/// sum D_{n+m} x^n/n! y^m/m! against e^{-(x+y)}/(1-x-y), and against the
/// expanded form whose x^n y^m coefficient is (1/m!) times the double sum.
inline CheckReport bivariate_thm1_check(Tables& t, std::size_t N) {
    const CheckParams params{.order = static_cast<unsigned>(N)};
    const Series2<Rat> closed = exp_neg_x_plus_y(N) * inv_one_minus_x_minus_y(N);
    auto defining = [&t](std::size_t i, std::size_t j) {
        Rat c(t.derangement(i + j), factorial(i) * factorial(j));
        c.canonicalize();
        return c;
    };
    CheckReport r = detail::compare_series2(IdentityId::BivThm1, params, closed, defining, "closed form");
    if (!r.pass) return r;
    const Series2<Rat> expanded = Series2<Rat>::from_fn(N, [&t](std::size_t n, std::size_t m) {
        Rat c = thm1_rhs(t, static_cast<unsigned>(m), static_cast<unsigned>(n)) / Rat(factorial(m));
        return c;
    });
    return detail::compare_series2(IdentityId::BivThm1, params, expanded, defining, "expanded form");
}

/// sum binom(m+n, m) H_{n+m} x^n y^m against log(1/(1-x-y))/(1-x-y), and
/// against the expanded right-hand side.
inline CheckReport bivariate_thm2_check(Tables& t, std::size_t N) {
    const CheckParams params{.order = static_cast<unsigned>(N)};
    const Series2<Rat> closed = log_inv_one_minus_x_minus_y(N) * inv_one_minus_x_minus_y(N);
    auto defining = [&t](std::size_t n, std::size_t m) { return Rat(t.harmonic(n + m) * int_binomial(n + m, m)); };
    CheckReport r = detail::compare_series2(IdentityId::BivThm2, params, closed, defining, "closed form");
    if (!r.pass) return r;
    const Series2<Rat> expanded = Series2<Rat>::from_fn(N, [&t](std::size_t n, std::size_t m) {
        return thm2_rhs(t, static_cast<unsigned>(m), static_cast<unsigned>(n));
    });
    return detail::compare_series2(IdentityId::BivThm2, params, expanded, defining, "expanded form");
}

/// sum binom(n+m, n) H_{n+m,lambda} x^n y^m against
/// log_{-lambda}(1/(1-x-y))/(1-x-y), and against the expanded right-hand side.
inline CheckReport bivariate_thm3_check(Tables& t, std::size_t N) {
    const CheckParams params{.order = static_cast<unsigned>(N)};
    Series2<LPoly> numer(N);
    numer.at(0, 0) = LPoly(1L);
    numer -= one_minus_x_minus_y_pow_lambda(N);
    const Series2<LPoly> deg_log = Series2<LPoly>::from_fn(
        N, [&numer](std::size_t i, std::size_t j) { return lpoly_exact_div(numer.at(i, j), LPoly::lambda()); });
    const Series2<LPoly> closed = deg_log * inv_one_minus_x_minus_y(N);
    auto defining = [&t](std::size_t n, std::size_t m) { return t.deg_harmonic(n + m) * int_binomial(n + m, n); };
    CheckReport r = detail::compare_series2(IdentityId::BivThm3, params, closed, defining, "closed form");
    if (!r.pass) return r;
    const Series2<LPoly> expanded = Series2<LPoly>::from_fn(N, [&t](std::size_t n, std::size_t m) {
        return thm3_rhs(t, static_cast<unsigned>(m), static_cast<unsigned>(n));
    });
    return detail::compare_series2(IdentityId::BivThm3, params, expanded, defining, "expanded form");
}

inline CheckReport gf_derangement_check(std::size_t N) { return gf_derangement_check(default_tables(), N); }
inline CheckReport gf_harmonic_check(std::size_t N) { return gf_harmonic_check(default_tables(), N); }
inline CheckReport gf_hyperharmonic_check(std::size_t N, unsigned r) {
    return gf_hyperharmonic_check(default_tables(), N, r);
}
inline CheckReport gf_deg_harmonic_check(std::size_t N) { return gf_deg_harmonic_check(default_tables(), N); }
inline CheckReport gf_deg_hyperharmonic_check(std::size_t N, unsigned r) {
    return gf_deg_hyperharmonic_check(default_tables(), N, r);
}
inline CheckReport bivariate_thm1_check(std::size_t N) { return bivariate_thm1_check(default_tables(), N); }
inline CheckReport bivariate_thm2_check(std::size_t N) { return bivariate_thm2_check(default_tables(), N); }
inline CheckReport bivariate_thm3_check(std::size_t N) { return bivariate_thm3_check(default_tables(), N); }

}  // namespace dharm
