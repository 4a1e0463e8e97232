#pragma once

// Both sides of every recurrence and closed form, evaluated exactly.
//
// Each check reads sequence values from a Tables instance so a sweep shares
// one memo; the overloads without a Tables argument use default_tables().

#include <utility>

#include "exact.hpp"
#include "report.hpp"
#include "sequences.hpp"

namespace dharm {

namespace detail {

inline long as_long(std::size_t v) { return static_cast<long>(v); }

/// sum_{k=0}^n H_k binom(m+n-k-1, n-k), the hyperharmonic side of the
/// harmonic recurrence.
inline Rat weighted_harmonic_sum(Tables& t, unsigned m, unsigned n) {
    Rat sum = 0;
    for (unsigned k = 1; k <= n; ++k) {  // H_0 = 0
        const Int w = int_binomial(as_long(m + n - k) - 1, n - k);
        if (w != 0) sum += t.harmonic(k) * w;
    }
    return sum;
}

/// sum_{l=0}^n H_{l,lambda} binom(m+n-l-1, n-l)
inline LPoly weighted_deg_harmonic_sum(Tables& t, unsigned m, unsigned n) {
    LPoly sum;
    for (unsigned l = 1; l <= n; ++l) {
        const Int w = int_binomial(as_long(m + n - l) - 1, n - l);
        if (w != 0) sum += t.deg_harmonic(l) * w;
    }
    return sum;
}

/// binom(m+n-lambda, n)
inline LPoly shifted_lambda_binomial(unsigned m, unsigned n) {
    return lpoly_binomial(LPoly::affine(Rat(as_long(m + n)), -1), n);
}

}  // namespace detail

/// sum_{l<=n} sum_{k<=m} binom(k+n-l-1, n-l) binom(m, k) (-1)^{m-k} (k!/l!) D_l
inline Rat thm1_rhs(Tables& t, unsigned m, unsigned n) {
    Rat rhs = 0;
    for (unsigned l = 0; l <= n; ++l) {
        // Inner sum over k is an integer; the l-dependent factor D_l/l! is not.
        Int inner = 0;
        for (unsigned k = 0; k <= m; ++k) {
            Int term = int_binomial(detail::as_long(k + n - l) - 1, n - l) * int_binomial(m, k) * factorial(k);
            if ((m - k) % 2 == 0)
                inner += term;
            else
                inner -= term;
        }
        if (inner == 0) continue;
        Rat term(inner * t.derangement(l), factorial(l));
        term.canonicalize();
        rhs += term;
    }
    return rhs;
}

/// D_{m+n}/n! against the double sum over l <= n, k <= m.
inline CheckReport thm1_check(Tables& t, unsigned m, unsigned n) {
    Rat lhs(t.derangement(m + n), factorial(n));
    lhs.canonicalize();
    return make_report(IdentityId::Thm1, {.m = m, .n = n}, lhs, thm1_rhs(t, m, n));
}

/// sum_{k<=n} H_k binom(m+n-k-1, n-k) + H_m binom(n+m, n)
inline Rat thm2_rhs(Tables& t, unsigned m, unsigned n) {
    Rat rhs = detail::weighted_harmonic_sum(t, m, n);
    rhs += t.harmonic(m) * int_binomial(m + n, n);
    return rhs;
}

inline CheckReport thm2_check(Tables& t, unsigned m, unsigned n) {
    const Rat lhs = t.harmonic(m + n) * int_binomial(m + n, n);
    return make_report(IdentityId::Thm2, {.m = m, .n = n}, lhs, thm2_rhs(t, m, n));
}

/// sum_{l<=n} H_{l,lambda} binom(m+n-l-1, n-l) + H_{m,lambda} binom(m+n-lambda, n)
inline LPoly thm3_rhs(Tables& t, unsigned m, unsigned n) {
    LPoly rhs = detail::weighted_deg_harmonic_sum(t, m, n);
    rhs += t.deg_harmonic(m) * detail::shifted_lambda_binomial(m, n);
    return rhs;
}

inline CheckReport thm3_check(Tables& t, unsigned m, unsigned n) {
    const LPoly lhs = t.deg_harmonic(m + n) * int_binomial(m + n, n);
    return make_report(IdentityId::Thm3, {.m = m, .n = n}, lhs, thm3_rhs(t, m, n));
}

/// Degenerate harmonic number at a rational lambda, computed directly in
/// rationals from sum_k binom(lambda-1, k-1)(-1)^{k-1}/k.
inline Rat deg_harmonic_at(std::size_t n, const Rat& lam) {
    Rat sum = 0;
    Rat binom = 1;  // binom(lam-1, k-1)
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            binom *= lam - Rat(detail::as_long(k) - 1);
            binom /= Rat(detail::as_long(k) - 1);
        }
        Rat term = binom / Rat(detail::as_long(k));
        if (k % 2 == 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

/// The degenerate harmonic recurrence specialized to a rational lambda,
/// evaluated entirely in rationals (no polynomial arithmetic).
inline CheckReport thm3_check_at(unsigned m, unsigned n, const Rat& lam) {
    const Rat lhs = deg_harmonic_at(m + n, lam) * int_binomial(m + n, n);
    Rat rhs = 0;
    for (unsigned l = 1; l <= n; ++l) rhs += deg_harmonic_at(l, lam) * int_binomial(detail::as_long(m + n - l) - 1, n - l);
    rhs += deg_harmonic_at(m, lam) * rat_binomial(Rat(detail::as_long(m + n)) - lam, n);
    return make_report(IdentityId::Thm3, {.m = m, .n = n, .lambda = lam}, lhs, rhs);
}

/// H_n^(m+1) = binom(n+m, m)(H_{n+m} - H_m)
inline CheckReport eq10_check(Tables& t, unsigned n, unsigned m) {
    const Rat& lhs = t.hyperharmonic(n, m + 1);
    const Rat rhs = (t.harmonic(n + m) - t.harmonic(m)) * int_binomial(n + m, m);
    return make_report(IdentityId::Eq10, {.m = m, .n = n}, lhs, rhs);
}

/// H_n^(m+1) = sum_{k=0}^n H_k binom(m+n-k-1, n-k)
inline CheckReport corollary_hyperharmonic_check(Tables& t, unsigned n, unsigned m) {
    const Rat& lhs = t.hyperharmonic(n, m + 1);
    const Rat rhs = detail::weighted_harmonic_sum(t, m, n);
    return make_report(IdentityId::CorHyper, {.m = m, .n = n}, lhs, rhs);
}

/// (-1)^m binom(lambda-1, m) H_{n,lambda}^(m+1) = binom(n+m, m)(H_{n+m,lambda} - H_{m,lambda})
inline CheckReport eq13_check(Tables& t, unsigned n, unsigned m) {
    LPoly lhs = lpoly_binomial(LPoly::affine(-1, 1), m) * t.deg_hyperharmonic(n, m + 1);
    if (m % 2 == 1) lhs = -lhs;
    const LPoly rhs = (t.deg_harmonic(n + m) - t.deg_harmonic(m)) * int_binomial(n + m, m);
    return make_report(IdentityId::Eq13, {.m = m, .n = n}, lhs, rhs);
}

/// Degenerate hyperharmonic numbers recovered from the degenerate harmonic
/// recurrence: the bracket B must be divisible by binom(lambda-1, m) and
/// (-1)^m B / binom(lambda-1, m) must equal H_{n,lambda}^(m+1).
///
/// Divisibility is decided first. A nonzero remainder is reported as a failed
/// check (note "not divisible", rhs = remainder) rather than thrown.
inline CheckReport eq13_corollary_check(Tables& t, unsigned n, unsigned m) {
    const CheckParams params{.m = m, .n = n};
    LPoly bracket = detail::weighted_deg_harmonic_sum(t, m, n);
    bracket += detail::shifted_lambda_binomial(m, n) * t.deg_harmonic(m);
    bracket -= t.deg_harmonic(m) * int_binomial(n + m, n);

    const LPoly divisor = lpoly_binomial(LPoly::affine(-1, 1), m);
    auto [quot, rem] = divmod(bracket, divisor);
    if (!rem.is_zero()) {
        CheckReport r = make_report(IdentityId::CorDegHyper, params, LPoly{}, rem);
        r.pass = false;
        r.note = "bracket not divisible by binom(L-1,m)";
        return r;
    }
    if (m % 2 == 1) quot = -quot;
    return make_report(IdentityId::CorDegHyper, params, t.deg_hyperharmonic(n, m + 1), quot);
}

/// log_lam(xy) = log_lam(x) + x^lam log_lam(y) = log_lam(y) + y^lam log_lam(x)
inline CheckReport eq6_check(const Rat& x, const Rat& y, long lam) {
    const Rat xy = x * y;
    const Rat lhs = deg_log_rational(xy, lam);
    const Rat lx = deg_log_rational(x, lam);
    const Rat ly = deg_log_rational(y, lam);
    const Rat first = lx + rat_pow(x, lam) * ly;
    const Rat second = ly + rat_pow(y, lam) * lx;
    const CheckParams params{.x = x, .y = y, .lambda = Rat(lam)};
    if (first != lhs) return make_report(IdentityId::Eq6, params, lhs, first);
    CheckReport r = make_report(IdentityId::Eq6, params, lhs, second);
    if (!r.pass) r.note = "second form";
    return r;
}

inline CheckReport thm1_check(unsigned m, unsigned n) { return thm1_check(default_tables(), m, n); }
inline CheckReport thm2_check(unsigned m, unsigned n) { return thm2_check(default_tables(), m, n); }
inline CheckReport thm3_check(unsigned m, unsigned n) { return thm3_check(default_tables(), m, n); }
inline CheckReport eq10_check(unsigned n, unsigned m) { return eq10_check(default_tables(), n, m); }
inline CheckReport corollary_hyperharmonic_check(unsigned n, unsigned m) {
    return corollary_hyperharmonic_check(default_tables(), n, m);
}
inline CheckReport eq13_check(unsigned n, unsigned m) { return eq13_check(default_tables(), n, m); }
inline CheckReport eq13_corollary_check(unsigned n, unsigned m) {
    return eq13_corollary_check(default_tables(), n, m);
}

}  // namespace dharm
