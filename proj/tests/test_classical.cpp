#include <gtest/gtest.h>

#include <multistirling/classical.hpp>

#include "oracles.hpp"

using namespace multistirling;

namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

Rational signed_stirling1(std::size_t n, std::size_t k)
{
    return (n - k) % 2 == 0 ? stirling1_unsigned(n, k) : -stirling1_unsigned(n, k);
}

} // namespace

TEST(Classical, Stirling1Examples)
{
    for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(stirling1_unsigned(n, n), Rational(1));
    }
    EXPECT_EQ(stirling1_unsigned(3, 2), Rational(3));
    EXPECT_EQ(stirling1_unsigned(4, 2), Rational(11));
    EXPECT_EQ(stirling1_unsigned(2, 5), Rational(0));
}

TEST(Classical, Stirling2Examples)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_EQ(stirling2(n, 1), Rational(1));
    }
    EXPECT_EQ(stirling2(3, 2), Rational(3));
    EXPECT_EQ(stirling2(4, 2), Rational(7));
    EXPECT_EQ(stirling2(0, 0), Rational(1));
    EXPECT_EQ(stirling2(3, 0), Rational(0));
    EXPECT_EQ(stirling2(3, 4), Rational(0));
}

TEST(Classical, LahExamples)
{
    EXPECT_EQ(lah_unsigned(3, 3), Rational(1));
    EXPECT_EQ(lah_unsigned(3, 2), Rational(6));
    EXPECT_EQ(lah_unsigned(4, 2), Rational(36));
    EXPECT_EQ(lah_unsigned(0, 0), Rational(1));
    EXPECT_EQ(lah_unsigned(4, 0), Rational(0));
    EXPECT_EQ(lah_unsigned(2, 3), Rational(0));
}

TEST(Classical, TablesMatchBruteForce)
{
    for (std::size_t n = 0; n <= 7; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(stirling1_unsigned(n, k), Rational(oracle::stirling1(n, k))) << n << "," << k;
            EXPECT_EQ(stirling2(n, k), Rational(oracle::stirling2(n, k))) << n << "," << k;
            EXPECT_EQ(lah_unsigned(n, k), Rational(oracle::lah(n, k))) << n << "," << k;
        }
    }
}

TEST(Classical, TableGrowsOnDemand)
{
    // Ask for a small entry first, then a large one, then the small one again.
    EXPECT_EQ(stirling2(5, 3), Rational(25));
    EXPECT_EQ(stirling2(40, 39), Rational(binomial(40, 2)));
    EXPECT_EQ(stirling2(5, 3), Rational(25));
}

TEST(Classical, GeneratingFunctionsAgree)
{
    const std::size_t N = 10;
    const auto e = exp_minus_one(N);
    const auto l = neg_log_one_minus(N);
    std::vector<Rational> ones(N + 1, Rational(1));
    ones[0] = 0;
    const TruncatedSeries t_over(N, ones);  // t/(1-t)
    for (std::size_t k = 0; k <= N; ++k) {
        const Rational inv_fact = Rational(1) / Rational(factorial(k));
        const auto s2 = egf_coeffs(series_scale(series_pow(e, k), inv_fact));
        const auto s1 = egf_coeffs(series_scale(series_pow(l, k), inv_fact));
        const auto lah = egf_coeffs(series_scale(series_pow(t_over, k), inv_fact));
        for (std::size_t n = 0; n <= N; ++n) {
            EXPECT_EQ(s2[n], stirling2(n, k));
            EXPECT_EQ(s1[n], stirling1_unsigned(n, k));
            EXPECT_EQ(lah[n], lah_unsigned(n, k));
        }
    }
}

TEST(Classical, StirlingInversion)
{
    const std::size_t N = 10;
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= N; ++m) {
            Rational sum;
            for (std::size_t k = 0; k <= N; ++k) {
                sum += signed_stirling1(n, k) * stirling2(k, m);
            }
            EXPECT_EQ(sum, Rational(n == m ? 1 : 0)) << n << "," << m;
        }
    }
}

TEST(Classical, LahIsStirling1ThenStirling2)
{
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            Rational sum;
            for (std::size_t j = k; j <= n; ++j) {
                sum += stirling1_unsigned(n, j) * stirling2(j, k);
            }
            EXPECT_EQ(sum, lah_unsigned(n, k));
        }
    }
}

TEST(Classical, HigherBernoulli)
{
    for (std::size_t r = 0; r <= 4; ++r) {
        EXPECT_EQ(bernoulli_higher(0, r, 5), Rational(1));
    }
    EXPECT_EQ(bernoulli_higher(1, 1, 2), q(-1, 2));
    EXPECT_EQ(bernoulli_higher(2, 1, 2), q(1, 6));
    EXPECT_EQ(bernoulli_higher(4, 1, 6), q(-1, 30));
    // B_n^{(2)}: 1, -1, 5/6, -1/2
    EXPECT_EQ(bernoulli_higher(1, 2, 3), Rational(-1));
    EXPECT_EQ(bernoulli_higher(2, 2, 3), q(5, 6));
    EXPECT_EQ(bernoulli_higher(3, 2, 3), q(-1, 2));
    EXPECT_THROW(bernoulli_higher(4, 2, 3), range_error);
}

TEST(Classical, HigherBernoulliIsConvolutionPower)
{
    const std::size_t N = 8;
    const auto b1 = bernoulli_higher_series(1, N);
    for (std::size_t r = 2; r <= 4; ++r) {
        EXPECT_EQ(bernoulli_higher_series(r, N), series_pow(b1, r)) << r;
    }
}
