#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "moments.hpp"
#include "multilog.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace multistirling {

// (M(t) - 1)^k / k!, the EGF of {n | k}_Y in n.
inline TruncatedSeries prob_stirling2_series(const MomentSequence& ms, std::size_t k, std::size_t order)
{
    const auto shifted = series_sub(mgf_series(ms, order), TruncatedSeries::one(order));
    return series_scale(series_pow(shifted, k), Rational(1) / Rational(factorial(k)));
}

/**
 * Full table {n | k}_Y for 0 <= k <= n <= N, built from successive powers
 * of M(t) - 1. Entry [n][k] for k > n is zero.
 */
inline std::vector<std::vector<Rational>> prob_stirling2_table(const MomentSequence& ms, std::size_t order)
{
    std::vector<std::vector<Rational>> table(order + 1, std::vector<Rational>(order + 1));
    const auto shifted = series_sub(mgf_series(ms, order), TruncatedSeries::one(order));
    TruncatedSeries power = TruncatedSeries::one(order);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            power = series_mul(power, shifted);
        }
        const auto egf = egf_coeffs(power);
        const Rational inv_fact = Rational(1) / Rational(factorial(k));
        for (std::size_t n = 0; n <= order; ++n) {
            table[n][k] = egf[n] * inv_fact;
        }
    }
    return table;
}

/// {n | k}_Y = n! [t^n] (M(t) - 1)^k / k!
inline Rational prob_stirling2(const MomentSequence& ms, std::size_t n, std::size_t k, std::size_t order)
{
    if (n > order) {
        throw range_error("prob_stirling2: n exceeds truncation order");
    }
    if (k > n) {
        return 0;
    }
    return egf_coeff(prob_stirling2_series(ms, k, order), n);
}

/**
 * The defining alternating sum
 *   {n | k}_Y = (1/k!) sum_j C(k, j) (-1)^{k-j} E[S_j^n],
 * evaluated from moments of sums of independent copies of Y.
 */
inline Rational prob_stirling2_alternating(const MomentSequence& ms, std::size_t n, std::size_t k, std::size_t order)
{
    if (n > order) {
        throw range_error("prob_stirling2_alternating: n exceeds truncation order");
    }
    Rational sum;
    for (std::size_t j = 0; j <= k; ++j) {
        const Rational term = Rational(binomial(k, j)) * snk_moment(ms, j, n, order);
        if (minus_one_pow(static_cast<long>(k - j)) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum / Rational(factorial(k));
}

// Li_{ks}(1 - e^{1 - M(t)})
inline TruncatedSeries prob_multi_stirling2_series(const MomentSequence& ms, const IndexTuple& ks, std::size_t order)
{
    const auto inner = one_minus_exp_one_minus(mgf_series(ms, order));
    return series_compose(multilog_series(ks, order), inner);
}

inline Rational prob_multi_stirling2(const MomentSequence& ms, const IndexTuple& ks, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("prob_multi_stirling2: n exceeds truncation order");
    }
    return egf_coeff(prob_multi_stirling2_series(ms, ks, order), n);
}

// (R(t) - 1)^k / k! with R(t) = E[(1 - t)^{-Y}]
inline TruncatedSeries prob_lah_series(const MomentSequence& ms, std::size_t k, std::size_t order)
{
    const auto shifted = series_sub(resolvent_series(ms, order), TruncatedSeries::one(order));
    return series_scale(series_pow(shifted, k), Rational(1) / Rational(factorial(k)));
}

inline Rational prob_lah(const MomentSequence& ms, std::size_t n, std::size_t k, std::size_t order)
{
    if (n > order) {
        throw range_error("prob_lah: n exceeds truncation order");
    }
    if (k > n) {
        return 0;
    }
    return egf_coeff(prob_lah_series(ms, k, order), n);
}

// Li_{ks}(1 - e^{1 - R(t)})
inline TruncatedSeries prob_multi_lah_series(const MomentSequence& ms, const IndexTuple& ks, std::size_t order)
{
    const auto inner = one_minus_exp_one_minus(resolvent_series(ms, order));
    return series_compose(multilog_series(ks, order), inner);
}

inline Rational prob_multi_lah(const MomentSequence& ms, const IndexTuple& ks, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("prob_multi_lah: n exceeds truncation order");
    }
    return egf_coeff(prob_multi_lah_series(ms, ks, order), n);
}

// 1 / (1 - y (M(t) - 1))^r
inline TruncatedSeries prob_fubini_series(const MomentSequence& ms, std::size_t r, const Rational& y, std::size_t order)
{
    const auto one = TruncatedSeries::one(order);
    const auto shifted = series_sub(mgf_series(ms, order), one);
    const auto base = series_sub(one, series_scale(shifted, y));
    return series_inv_unit(series_pow(base, r));
}

/// F_n^{(r,Y)}(y)
inline Rational prob_fubini(const MomentSequence& ms, std::size_t r, const Rational& y, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("prob_fubini: n exceeds truncation order");
    }
    if (r == 0) {
        throw usage_error("prob_fubini: order r must be positive");
    }
    return egf_coeff(prob_fubini_series(ms, r, y, order), n);
}

} // namespace multistirling
