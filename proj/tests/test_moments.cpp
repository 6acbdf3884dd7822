#include <gtest/gtest.h>

#include <multistirling/moments.hpp>

#include "oracles.hpp"

using namespace multistirling;

namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

MomentSequence moments(const char* spec, std::size_t order) { return moments_from_spec(parse_distribution(spec), order); }

std::vector<Rational> rationals(std::initializer_list<Rational> xs) { return xs; }

} // namespace

TEST(Moments, Examples)
{
    EXPECT_EQ(moments("point:1", 4), MomentSequence(rationals({1, 1, 1, 1, 1})));
    EXPECT_EQ(moments("poisson:1", 5), MomentSequence(rationals({1, 1, 2, 5, 15, 52})));
    EXPECT_EQ(moments("bernoulli:1/2", 3), MomentSequence(rationals({1, q(1, 2), q(1, 2), q(1, 2)})));
}

TEST(Moments, PoissonOneGivesBellNumbers)
{
    const auto bell = oracle::bell_triangle(10);
    const auto ms = moments("poisson:1", 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(ms[n], Rational(bell[n])) << n;
    }
}

TEST(Moments, BinomialAndGeometricAgreeWithDirectSums)
{
    // Binomial(3, 1/3): sum_j C(3, j) (1/3)^j (2/3)^{3-j} j^n
    const auto bin = moments("binomial:3,1/3", 8);
    // Geometric(1/2) on {0,1,2,...}: sum k^n / 2^{k+1} is the n-th ordered Bell number.
    const auto geo = moments("geometric:1/2", 5);
    const long fubini[] = {1, 1, 3, 13, 75, 541};
    for (std::size_t n = 0; n <= 8; ++n) {
        Rational sum;
        for (long j = 0; j <= 3; ++j) {
            sum += Rational(binomial(3, j)) * pow(q(1, 3), j) * pow(q(2, 3), 3 - j) * pow(Rational(j), static_cast<long>(n));
        }
        EXPECT_EQ(bin[n], sum) << n;
    }
    for (std::size_t n = 0; n <= 5; ++n) {
        EXPECT_EQ(geo[n], Rational(fubini[n])) << n;
        EXPECT_EQ(geo[n], Rational(oracle::ordered_bell(n))) << n;
    }
}

TEST(Moments, FiniteSupportRecomputed)
{
    const char* spec = "finite:-1=1/3;1/2=1/6;3=1/2";
    const auto ms = moments(spec, 7);
    for (std::size_t n = 0; n <= 7; ++n) {
        const Rational expected = q(1, 3) * pow(Rational(-1), static_cast<long>(n)) +
                                  q(1, 6) * pow(q(1, 2), static_cast<long>(n)) +
                                  q(1, 2) * pow(Rational(3), static_cast<long>(n));
        EXPECT_EQ(ms[n], expected) << n;
    }
}

TEST(Moments, RawIsEchoedAndTruncated)
{
    const auto ms = moments("raw:1,2,7,-3", 2);
    EXPECT_EQ(ms.order(), 2u);
    EXPECT_EQ(ms[2], Rational(7));
    const auto shorter = moments("raw:1,2", 5);
    EXPECT_EQ(shorter.order(), 1u);
    EXPECT_THROW((void)shorter.mu(2), range_error);
    EXPECT_THROW(mgf_series(shorter, 5), range_error);
}

TEST(Moments, ParseErrors)
{
    for (const char* bad : {"point", "point:", "point:1,2", "bernoulli:0", "bernoulli:3/2", "binomial:0,1/2",
                            "binomial:1/2,1/2", "poisson:-1", "geometric:0", "finite:1=1/2", "finite:1", "raw:2,1",
                            "raw:", "normal:0", "bernoulli:0.5"}) {
        EXPECT_THROW(parse_distribution(bad), spec_error) << bad;
    }
    EXPECT_THROW(MomentSequence(rationals({2, 1})), spec_error);
    EXPECT_THROW(MomentSequence(std::vector<Rational>{}), spec_error);
}

TEST(Moments, CanonicalTextRoundTrips)
{
    for (const char* spec : {"point:2", "bernoulli:1/2", "binomial:3,1/3", "poisson:1", "geometric:1/2",
                             "finite:0=1/2;2=1/2", "raw:1,0,1"}) {
        EXPECT_EQ(to_string(parse_distribution(spec)), spec);
        EXPECT_EQ(to_string(parse_distribution(to_string(parse_distribution(spec)))), spec);
    }
    EXPECT_EQ(to_string(parse_distribution("point:4/2")), "point:2");
}

TEST(Moments, MgfExamples)
{
    EXPECT_EQ(mgf_series(moments("point:1", 8), 8), TruncatedSeries::exp_linear(8));

    const auto p = q(1, 3);
    const auto bern = mgf_series(moments("bernoulli:1/3", 6), 6);
    const auto expected = series_add(TruncatedSeries::one(6), series_scale(exp_minus_one(6), p));
    EXPECT_EQ(bern, expected);

    const auto poisson = mgf_series(moments("poisson:1", 6), 6);
    EXPECT_EQ(poisson, series_exp(exp_minus_one(6)));
}

TEST(Moments, ResolventExamples)
{
    std::vector<Rational> ones(9, Rational(1));
    EXPECT_EQ(resolvent_series(moments("point:1", 8), 8), TruncatedSeries(8, ones));

    const auto r2 = resolvent_series(moments("point:2", 8), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(r2[n], Rational(n + 1));
    }
    EXPECT_EQ(resolvent_series(moments("bernoulli:1/2", 4), 4)[1], q(1, 2));
}

TEST(Moments, SumMoments)
{
    const auto pt = moments("point:1", 6);
    EXPECT_EQ(snk_moment(pt, 0, 0, 6), Rational(1));
    EXPECT_EQ(snk_moment(pt, 0, 3, 6), Rational(0));
    for (std::size_t j = 1; j <= 4; ++j) {
        for (std::size_t n = 0; n <= 6; ++n) {
            EXPECT_EQ(snk_moment(pt, j, n, 6), pow(Rational(j), static_cast<long>(n)));
        }
    }
    const auto bern = moments("bernoulli:1/2", 4);
    EXPECT_EQ(snk_moment(bern, 2, 2, 4), q(3, 2));
    EXPECT_THROW(snk_moment(bern, 2, 5, 4), range_error);
}

TEST(Moments, FirstSumMomentIsMu)
{
    for (const char* spec : {"binomial:3,1/3", "poisson:1", "geometric:1/2", "finite:0=1/2;2=1/2"}) {
        const auto ms = moments(spec, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            EXPECT_EQ(snk_moment(ms, 1, n, 10), ms[n]) << spec << " " << n;
        }
    }
}
