#pragma once

// Exact arithmetic layer: big integers, reduced rationals, polynomials in the
// formal symbol lambda, and the binomial / falling-factorial primitives.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dharm {

using Int = mpz_class;
/// Always canonical: every arithmetic result is reduced, denominator > 0.
using Rat = mpq_class;

/// Raised when a polynomial division that is claimed to be exact leaves a
/// nonzero remainder.
class NonDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Product-formula binomial a(a-1)...(a-b+1)/b!. Valid for any integer top,
/// so binom(-1, 0) = 1 and binom(a, b) = 0 whenever 0 <= a < b.
inline Int int_binomial(long a, unsigned long b) {
    Int r;
    const Int top(a);
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), b);
    return r;
}

/// Generalized binomial p(p-1)...(p-n+1)/n! at a rational argument.
inline Rat rat_binomial(const Rat& p, unsigned long n) {
    Rat r = 1;
    for (unsigned long i = 0; i < n; ++i) {
        r *= p - Rat(static_cast<long>(i));
        r /= Rat(static_cast<long>(i + 1));
    }
    return r;
}

/// Integer power of a rational; negative exponents invert. 0^e with e < 0 throws.
inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0 && base == 0) throw std::domain_error("rat_pow: zero to a negative power");
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
    Rat r = e < 0 ? Rat(den, num) : Rat(num, den);
    r.canonicalize();
    return r;
}

/// x(x - lam)(x - 2 lam)...(x - (n-1) lam); the empty product is 1.
inline Rat falling_factorial(const Rat& x, unsigned long n, const Rat& lam) {
    Rat r = 1;
    Rat shift = 0;
    for (unsigned long i = 0; i < n; ++i) {
        r *= x - shift;
        shift += lam;
    }
    return r;
}

/// Degenerate logarithm (t^lam - 1)/lam at a positive rational t and a nonzero
/// integer lam, so the result stays rational.
inline Rat deg_log_rational(const Rat& t, long lam) {
    if (lam == 0) throw std::domain_error("deg_log_rational: lambda must be nonzero");
    if (t <= 0) throw std::domain_error("deg_log_rational: t must be positive");
    Rat r = (rat_pow(t, lam) - 1) / Rat(lam);
    return r;
}

/// Polynomial in the formal indeterminate lambda with rational coefficients.
/// coeffs()[i] is the coefficient of lambda^i; there are never trailing zeros,
/// so the zero polynomial has no coefficients at all.
class LPoly {
public:
    LPoly() = default;
    explicit LPoly(const Rat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit LPoly(long constant) : LPoly(Rat(constant)) {}
    explicit LPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    LPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    /// The indeterminate itself.
    static LPoly lambda() { return LPoly({Rat(0), Rat(1)}); }
    /// a + b*lambda
    static LPoly affine(const Rat& a, const Rat& b) { return LPoly({a, b}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::span<const Rat> coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat constant_term() const { return coeff(0); }

    Rat eval(const Rat& at) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= at;
            acc += *it;
        }
        return acc;
    }

    LPoly& operator+=(const LPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    LPoly& operator-=(const LPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    LPoly& operator*=(const Rat& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    LPoly& operator*=(const Int& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    LPoly& operator*=(const LPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator-(LPoly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return LPoly(std::move(r));
    }
    friend LPoly operator*(LPoly a, const Rat& s) { return a *= s; }
    friend LPoly operator*(const Rat& s, LPoly a) { return a *= s; }
    friend LPoly operator*(LPoly a, const Int& s) { return a *= s; }
    friend LPoly operator*(const Int& s, LPoly a) { return a *= s; }

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (quotient, remainder), deg remainder < deg q.
    friend std::pair<LPoly, LPoly> divmod(const LPoly& p, const LPoly& q) {
        if (q.is_zero()) throw std::domain_error("LPoly division by zero polynomial");
        std::vector<Rat> rem = p.c_;
        const std::size_t dq = q.c_.size() - 1;
        if (rem.size() <= dq) return {LPoly{}, p};
        std::vector<Rat> quot(rem.size() - dq);
        const Rat& lead = q.c_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rat f = rem[k + dq] / lead;
            if (f != 0) {
                for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= f * q.c_[j];
            }
            quot[k] = std::move(f);
        }
        rem.resize(dq);
        return {LPoly(std::move(quot)), LPoly(std::move(rem))};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// p / q, required to be exact. Throws NonDivisible otherwise.
inline LPoly lpoly_exact_div(const LPoly& p, const LPoly& q) {
    auto [quot, rem] = divmod(p, q);
    if (!rem.is_zero()) throw NonDivisible("polynomial division leaves a nonzero remainder");
    return quot;
}

/// Generalized binomial p(p-1)...(p-n+1)/n! for p affine in lambda.
inline LPoly lpoly_binomial(const LPoly& p, unsigned long n) {
    if (p.degree() > 1) throw std::invalid_argument("lpoly_binomial: argument must be affine in lambda");
    LPoly r(1L);
    for (unsigned long i = 0; i < n; ++i) r *= p - LPoly(static_cast<long>(i));
    r *= Rat(Int(1), factorial(n));
    return r;
}

}  // namespace dharm
