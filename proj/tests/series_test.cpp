#include <random>

#include <gtest/gtest.h>

#include <dharm/series.hpp>

#include "oracles.hpp"

namespace dharm {
namespace {

Series1<Rat> random_series(std::mt19937_64& rng, std::size_t N) {
    Series1<Rat> s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = oracle::random_rat(rng);
    return s;
}

Series1<LPoly> random_lpoly_series(std::mt19937_64& rng, std::size_t N) {
    Series1<LPoly> s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = oracle::random_lpoly(rng, 3);
    return s;
}

TEST(Series1, GeometricExamples) {
    EXPECT_EQ(geometric(2), Series1<Rat>(2, {1, 1, 1}));
    const Series1<Rat> one_minus_t(10, {1, -1});
    EXPECT_EQ(geometric(10) * one_minus_t, Series1<Rat>(10, {1}));
    const auto sq = geometric(10) * geometric(10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(sq[n], static_cast<long>(n + 1));
}

TEST(Series1, PowInvOneMinusT) {
    EXPECT_EQ(pow_inv_one_minus_t(0, 5), Series1<Rat>(5, {1}));
    EXPECT_EQ(pow_inv_one_minus_t(1, 5), geometric(5));
    const auto cube = geometric(8) * geometric(8) * geometric(8);
    EXPECT_EQ(pow_inv_one_minus_t(3, 8)[2], 6);
    EXPECT_EQ(pow_inv_one_minus_t(3, 8), cube);
}

TEST(Series1, LogInvOneMinusT) {
    const auto s = log_inv_one_minus_t(20);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[4], Rat(1, 4));
    for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(s[n + 1] * static_cast<unsigned long>(n + 1), 1);
}

TEST(Series1, ExpNegT) {
    const auto e = exp_neg_t(15);
    EXPECT_EQ(e[0], 1);
    EXPECT_EQ(e[3], Rat(-1, 6));
    Series1<Rat> exp_t(15);
    for (std::size_t n = 0; n <= 15; ++n) exp_t[n] = Rat(Int(1), factorial(n));
    EXPECT_EQ(e * exp_t, Series1<Rat>(15, {1}));
}

TEST(Series1, OneMinusTPowLambda) {
    const auto s = one_minus_t_pow_lambda(6);
    EXPECT_EQ(s[0], LPoly(1L));
    EXPECT_EQ(s[1], LPoly::affine(0, -1));
    EXPECT_EQ(s[2], (LPoly{Rat(0), Rat(-1, 2), Rat(1, 2)}));
    // At lambda = 3 this is the polynomial (1-t)^3.
    const Rat coeffs[] = {1, -3, 3, -1, 0, 0, 0};
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(s[n].eval(3), coeffs[n]);
}

TEST(Series1, DegLogSeries) {
    const auto s = deg_log_series(40);
    EXPECT_TRUE(s[0].is_zero());
    EXPECT_EQ(s[1], LPoly(1L));
    EXPECT_EQ(s[2], (LPoly{Rat(1, 2), Rat(-1, 2)}));
    const auto log = log_inv_one_minus_t(40);
    for (std::size_t n = 1; n <= 40; ++n) EXPECT_EQ(s[n].constant_term(), log[n]) << n;
    // log_{-lambda}(1/(1-t)) = -log_lambda(1-t), and log_lambda(1+t) has coefficients binom(lambda-1, n-1)/n.
    for (std::size_t n = 1; n <= 20; ++n)
        for (const Rat& lam : {Rat(1, 3), Rat(-2), Rat(5, 2)}) {
            Rat expected = oracle::gen_binomial(lam - 1, n - 1) / Rat(static_cast<long>(n));
            if (n % 2 == 0) expected = -expected;
            EXPECT_EQ(s[n].eval(lam), expected) << n;
        }
}

TEST(Series1, RingLaws) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 30), b = random_series(rng, 30), c = random_series(rng, 30);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
    }
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_lpoly_series(rng, 12), b = random_lpoly_series(rng, 12), c = random_lpoly_series(rng, 12);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
    }
}

TEST(Series1, TruncationCoherence) {
    for (std::size_t big : {30u, 45u})
        for (std::size_t small : {0u, 7u, 29u}) {
            EXPECT_EQ(geometric(big).truncate(small), geometric(small));
            EXPECT_EQ(pow_inv_one_minus_t(4, big).truncate(small), pow_inv_one_minus_t(4, small));
            EXPECT_EQ(log_inv_one_minus_t(big).truncate(small), log_inv_one_minus_t(small));
            EXPECT_EQ(exp_neg_t(big).truncate(small), exp_neg_t(small));
            EXPECT_EQ(one_minus_t_pow_lambda(big).truncate(small), one_minus_t_pow_lambda(small));
            EXPECT_EQ(deg_log_series(big).truncate(small), deg_log_series(small));
            EXPECT_EQ((geometric(big) * exp_neg_t(big)).truncate(small), geometric(small) * exp_neg_t(small));
        }
    EXPECT_THROW(geometric(3).truncate(4), std::invalid_argument);
}

TEST(Series2, TriangularIndexing) {
    auto s = Series2<Rat>::from_fn(5, [](std::size_t i, std::size_t j) { return Rat(static_cast<long>(10 * i + j)); });
    for (std::size_t i = 0; i <= 5; ++i)
        for (std::size_t j = 0; i + j <= 5; ++j) EXPECT_EQ(s.at(i, j), static_cast<long>(10 * i + j));
    EXPECT_THROW(s.at(3, 3), std::out_of_range);
}

TEST(Series2, ProductAgreesWithUnivariateAlongAxes) {
    // Setting y = 0 in a product of bivariate series is the product of the x-axis series.
    const auto g = inv_one_minus_x_minus_y(10);
    const auto e = exp_neg_x_plus_y(10);
    const auto p = g * e;
    const auto uni = geometric(10) * exp_neg_t(10);
    for (std::size_t i = 0; i <= 10; ++i) {
        EXPECT_EQ(p.at(i, 0), uni[i]);
        EXPECT_EQ(p.at(0, i), uni[i]);
    }
}

TEST(Series2, TruncationCoherence) {
    EXPECT_EQ(inv_one_minus_x_minus_y(12).truncate(5), inv_one_minus_x_minus_y(5));
    EXPECT_EQ(one_minus_x_minus_y_pow_lambda(9).truncate(4), one_minus_x_minus_y_pow_lambda(4));
    EXPECT_EQ((exp_neg_x_plus_y(12) * log_inv_one_minus_x_minus_y(12)).truncate(6),
              exp_neg_x_plus_y(6) * log_inv_one_minus_x_minus_y(6));
}

TEST(GeneratingFunctions, Examples) {
    Tables t;
    EXPECT_TRUE(gf_derangement_check(t, 6).pass);
    const auto gfd = geometric(2) * exp_neg_t(2);
    EXPECT_EQ(gfd[0], 1);
    EXPECT_EQ(gfd[2] * factorial(2), 1);
    const auto gfh = geometric(2) * log_inv_one_minus_t(2);
    EXPECT_EQ(gfh[2], Rat(3, 2));
    const auto gfdh = geometric(2) * deg_log_series(2);
    EXPECT_EQ(gfdh[2], (LPoly{Rat(3, 2), Rat(-1, 2)}));
    const auto gf0 = pow_inv_one_minus_t(0, 10) * log_inv_one_minus_t(10);
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(gf0[n], Rat(1, n));
}

TEST(GeneratingFunctions, OrderOneCoincidesWithHarmonicChecks) {
    Tables t;
    const auto a = gf_hyperharmonic_check(t, 50, 1), b = gf_harmonic_check(t, 50);
    EXPECT_TRUE(a.pass && b.pass);
    EXPECT_EQ(a.lhs, b.lhs);
    const auto c = gf_deg_hyperharmonic_check(t, 30, 1), d = gf_deg_harmonic_check(t, 30);
    EXPECT_TRUE(c.pass && d.pass);
    EXPECT_EQ(c.lhs, d.lhs);
}

TEST(GeneratingFunctions, DegenerateHarmonicEquivalence) {
    Tables t;
    const auto gf = geometric(60) * deg_log_series(60);
    const auto dh = degenerate_harmonics(60);
    for (std::size_t n = 0; n <= 60; ++n) ASSERT_EQ(gf[n], dh[n]) << n;
    EXPECT_TRUE(gf_deg_harmonic_check(t, 60).pass);
}

TEST(GeneratingFunctions, PartialSumShadow) {
    // Multiplying by 1/(1-t) takes partial sums, which is the order recursion.
    for (unsigned r = 0; r <= 5; ++r) {
        const auto lower = pow_inv_one_minus_t(r, 100) * log_inv_one_minus_t(100);
        const auto upper = pow_inv_one_minus_t(r + 1, 100) * log_inv_one_minus_t(100);
        EXPECT_EQ(geometric(100) * lower, upper) << r;
    }
    for (unsigned r = 0; r <= 3; ++r) {
        const auto lower = pow_inv_one_minus_t(r, 25) * deg_log_series(25);
        const auto upper = pow_inv_one_minus_t(r + 1, 25) * deg_log_series(25);
        EXPECT_EQ(geometric(25) * lower, upper) << r;
    }
}

TEST(GeneratingFunctions, DetectCorruption) {
    Tables t;
    t.override_value(Kind::Derangement, 5, 0, Int(45));
    const auto r = gf_derangement_check(t, 10);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.first_diff.has_value());
    EXPECT_EQ(*r.first_diff, 5u);
    EXPECT_EQ(r.lhs, "45");
    EXPECT_EQ(r.rhs, "44");
}

TEST(Bivariate, Examples) {
    Tables t;
    const auto closed1 = exp_neg_x_plus_y(4) * inv_one_minus_x_minus_y(4);
    EXPECT_EQ(closed1.at(1, 1), 1);  // D_2
    EXPECT_EQ(closed1.at(0, 0), 1);
    const auto closed2 = log_inv_one_minus_x_minus_y(4) * inv_one_minus_x_minus_y(4);
    EXPECT_EQ(closed2.at(1, 1), 3);
    EXPECT_EQ(closed2.at(0, 0), 0);
    EXPECT_TRUE(bivariate_thm1_check(t, 20).pass);
    EXPECT_TRUE(bivariate_thm2_check(t, 20).pass);
    EXPECT_TRUE(bivariate_thm3_check(t, 12).pass);
}

TEST(Bivariate, Thm3ConstantProjectionIsThm2) {
    Series2<LPoly> numer(12);
    numer.at(0, 0) = LPoly(1L);
    numer -= one_minus_x_minus_y_pow_lambda(12);
    const auto deg_log = Series2<LPoly>::from_fn(
        12, [&](std::size_t i, std::size_t j) { return lpoly_exact_div(numer.at(i, j), LPoly::lambda()); });
    const auto closed3 = deg_log * inv_one_minus_x_minus_y(12);
    const auto closed2 = log_inv_one_minus_x_minus_y(12) * inv_one_minus_x_minus_y(12);
    for (std::size_t i = 0; i <= 12; ++i)
        for (std::size_t j = 0; i + j <= 12; ++j) EXPECT_EQ(closed3.at(i, j).constant_term(), closed2.at(i, j));
    const auto c11 = closed3.at(1, 1);
    EXPECT_EQ(c11, LPoly::affine(3, -1));
}

TEST(Bivariate, DetectsCorruption) {
    Tables t;
    t.override_value(Kind::Harmonic, 3, 0, Rat(11, 7));
    const auto r = bivariate_thm2_check(t, 6);
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.note.find("closed form"), std::string::npos);
}

}  // namespace
}  // namespace dharm
