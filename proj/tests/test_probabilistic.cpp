#include <gtest/gtest.h>

#include <multistirling/multi_numbers.hpp>
#include <multistirling/probabilistic.hpp>

#include "oracles.hpp"

using namespace multistirling;

namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

MomentSequence moments(const char* spec, std::size_t order) { return moments_from_spec(parse_distribution(spec), order); }

const char* const grid_dists[] = {"point:1",   "point:2",       "bernoulli:1/2",     "binomial:3,1/3",
                                  "poisson:1", "geometric:1/2", "finite:0=1/2;2=1/2"};

const std::vector<IndexTuple> tuples = {{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 3}, {1, 2, 3}};

} // namespace

TEST(ProbStirling2, Examples)
{
    const auto pt = moments("point:1", 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(prob_stirling2(pt, n, k, 8), Rational(oracle::stirling2(n, k)));
        }
    }
    EXPECT_EQ(prob_stirling2(moments("bernoulli:1/2", 4), 2, 2, 4), q(1, 4));
    EXPECT_EQ(prob_stirling2(moments("poisson:1", 4), 0, 0, 4), Rational(1));
    EXPECT_THROW(prob_stirling2(pt, 9, 1, 8), range_error);
}

TEST(ProbStirling2, RoutesAgree)
{
    const std::size_t N = 10;
    for (const char* spec : grid_dists) {
        const auto ms = moments(spec, N);
        const auto table = prob_stirling2_table(ms, N);
        for (std::size_t n = 0; n <= N; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const auto alt = prob_stirling2_alternating(ms, n, k, N);
                EXPECT_EQ(prob_stirling2(ms, n, k, N), alt) << spec << " " << n << "," << k;
                EXPECT_EQ(table[n][k], alt) << spec << " " << n << "," << k;
            }
        }
    }
}

TEST(ProbMultiStirling2, Examples)
{
    const auto pt = moments("point:1", 10);
    for (const auto& ks : tuples) {
        EXPECT_EQ(prob_multi_stirling2_series(pt, ks, 10), multi_stirling2_series(ks, 10)) << ks.str();
    }
    // [t^2] is (1/4)(1/2)^2 = 1/16; the EGF value is 2! times that.
    const auto bern = moments("bernoulli:1/2", 4);
    EXPECT_EQ(prob_multi_stirling2_series(bern, {1, 2}, 4)[2], q(1, 16));
    EXPECT_EQ(prob_multi_stirling2(bern, {1, 2}, 2, 4), q(1, 8));
}

TEST(ProbMultiStirling2, OnesReduceToSingleIndex)
{
    const std::size_t N = 12;
    for (const char* spec : grid_dists) {
        const auto ms = moments(spec, N);
        for (std::size_t r = 1; r <= 4; ++r) {
            const auto lhs = egf_coeffs(prob_multi_stirling2_series(ms, IndexTuple::ones(r), N));
            for (std::size_t n = 0; n <= N; ++n) {
                EXPECT_EQ(lhs[n], prob_stirling2_alternating(ms, n, r, N)) << spec << " r=" << r << " n=" << n;
            }
        }
    }
}

TEST(ProbLah, Examples)
{
    const auto pt = moments("point:1", 8);
    for (std::size_t n = 0; n <= 7; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(prob_lah(pt, n, k, 8), Rational(oracle::lah(n, k)));
        }
    }
    EXPECT_EQ(prob_lah(moments("poisson:1", 3), 0, 0, 3), Rational(1));
    EXPECT_EQ(prob_lah(moments("point:2", 3), 1, 1, 3), Rational(2));
}

TEST(ProbMultiLah, OnesReduceToSingleIndex)
{
    const std::size_t N = 12;
    for (const char* spec : grid_dists) {
        const auto ms = moments(spec, N);
        for (std::size_t r = 1; r <= 4; ++r) {
            const auto lhs = egf_coeffs(prob_multi_lah_series(ms, IndexTuple::ones(r), N));
            for (std::size_t n = 0; n <= N; ++n) {
                EXPECT_EQ(lhs[n], prob_lah(ms, n, r, N)) << spec << " r=" << r << " n=" << n;
            }
        }
    }
}

TEST(ProbMultiLah, PointMassAllOnesCollapses)
{
    const auto pt = moments("point:1", 10);
    EXPECT_EQ(prob_multi_lah(pt, {1, 1}, 3, 10), Rational(6));
    for (std::size_t r = 1; r <= 4; ++r) {
        EXPECT_EQ(prob_multi_lah_series(pt, IndexTuple::ones(r), 10), multi_lah_series(IndexTuple::ones(r), 10));
    }
}

// With Y = 1 the probabilistic family is Li(1 - e^{-t/(1-t)}), which is not
// Li(1 - e^{-t}) / (1 - t)^r once ks has an entry other than 1.
TEST(ProbMultiLah, PointMassGeneralTupleDiffersFromDeterministic)
{
    const auto pt = moments("point:1", 10);
    EXPECT_EQ(prob_multi_lah(pt, {2}, 3, 10), q(19, 6));
    EXPECT_EQ(multi_lah({2}, 3, 10), q(14, 3));
    EXPECT_EQ(prob_multi_lah(pt, {1, 2}, 4, 10), q(49, 4));
    EXPECT_EQ(multi_lah({1, 2}, 4, 10), q(57, 4));

    // Independent route for the probabilistic side: compose with t/(1-t) directly.
    std::vector<Rational> c(11, Rational(1));
    c[0] = 0;
    const TruncatedSeries t_over(10, c);
    const auto inner = series_sub(TruncatedSeries::one(10), series_compose(TruncatedSeries::exp_linear(10, -1), t_over));
    for (const auto& ks : tuples) {
        EXPECT_EQ(prob_multi_lah_series(pt, ks, 10), series_compose(multilog_series(ks, 10), inner)) << ks.str();
    }
}

TEST(ProbMultiNumbers, VanishBelowTupleLength)
{
    for (const char* spec : grid_dists) {
        const auto ms = moments(spec, 8);
        for (const auto& ks : tuples) {
            const auto s2 = prob_multi_stirling2_series(ms, ks, 8);
            const auto lah = prob_multi_lah_series(ms, ks, 8);
            for (std::size_t n = 0; n < ks.size(); ++n) {
                EXPECT_TRUE(s2[n].is_zero()) << spec << " " << ks.str();
                EXPECT_TRUE(lah[n].is_zero()) << spec << " " << ks.str();
            }
        }
    }
}

TEST(ProbFubini, Examples)
{
    const auto pois = moments("poisson:1", 6);
    EXPECT_EQ(prob_fubini(pois, 2, Rational(0), 0, 6), Rational(1));
    for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_TRUE(prob_fubini(pois, 2, Rational(0), n, 6).is_zero());
    }

    const auto pt = moments("point:1", 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(prob_fubini(pt, 1, Rational(1), n, 6), Rational(oracle::ordered_bell(n))) << n;
    }
    EXPECT_EQ(prob_fubini(pt, 1, Rational(1), 4, 6), Rational(75));
    for (const Rational& y : {q(1, 3), q(-2), q(7, 5)}) {
        EXPECT_EQ(prob_fubini(pt, 1, y, 1, 6), y);
    }
    EXPECT_THROW(prob_fubini(pt, 0, Rational(1), 1, 6), usage_error);
    EXPECT_THROW(prob_fubini(pt, 1, Rational(1), 7, 6), range_error);
}

TEST(ProbFubini, PointMassMatchesSurjectionSum)
{
    // F_n^{(r)}(y) = sum_k C(r+k-1, k) k! {n | k} y^k for Y = 1.
    const auto pt = moments("point:1", 7);
    const Rational y = q(2, 3);
    for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t n = 0; n <= 7; ++n) {
            Rational sum;
            for (std::size_t k = 0; k <= n; ++k) {
                sum += Rational(binomial(r + k - 1, k)) * Rational(factorial(k)) * Rational(oracle::stirling2(n, k)) *
                       pow(y, static_cast<long>(k));
            }
            EXPECT_EQ(prob_fubini(pt, r, y, n, 7), sum) << r << " " << n;
        }
    }
}
