#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "multilog.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "series.hpp"

namespace multistirling {

// EGF of the multi-Stirling numbers of the second kind: Li_{ks}(1 - e^{1 - e^t}).
inline TruncatedSeries multi_stirling2_series(const IndexTuple& ks, std::size_t order)
{
    const auto inner = one_minus_exp_one_minus(TruncatedSeries::exp_linear(order));
    return series_compose(multilog_series(ks, order), inner);
}

/**
 * EGF of the multi-Bernoulli numbers: Li_{ks}(1 - e^{-t}) / (1 - e^{-t})^r.
 * Works at order + r internally so the result is exact through `order`.
 */
inline TruncatedSeries multi_bernoulli_series(const IndexTuple& ks, std::size_t order)
{
    const std::size_t r = ks.size();
    const std::size_t work = order + r;
    const auto u = one_minus_exp_neg(work);
    return series_div_valuated(series_compose(multilog_series(ks, work), u), series_pow(u, r), r);
}

// EGF of the multi-Lah numbers: Li_{ks}(1 - e^{-t}) / (1 - t)^r.
inline TruncatedSeries multi_lah_series(const IndexTuple& ks, std::size_t order)
{
    const auto one_minus_t = series_sub(TruncatedSeries::one(order), TruncatedSeries::monomial(order, 1));
    const auto composed = series_compose(multilog_series(ks, order), one_minus_exp_neg(order));
    return series_mul(composed, series_inv_unit(series_pow(one_minus_t, ks.size())));
}

inline Rational multi_stirling2(const IndexTuple& ks, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("multi_stirling2: n exceeds truncation order");
    }
    return egf_coeff(multi_stirling2_series(ks, order), n);
}

inline Rational multi_bernoulli(const IndexTuple& ks, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("multi_bernoulli: n exceeds truncation order");
    }
    return egf_coeff(multi_bernoulli_series(ks, order), n);
}

// L^{(ks)}(n, r) with r the tuple length.
inline Rational multi_lah(const IndexTuple& ks, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("multi_lah: n exceeds truncation order");
    }
    return egf_coeff(multi_lah_series(ks, order), n);
}

/**
 * Checks {n+1 | ks_prefix, 1} = sum_{m=r-1}^{n} C(n, m) {m | ks_prefix}
 * for n <= N - 1, where r - 1 is the prefix length.
 */
inline VerificationReport check_eq13(const IndexTuple& ks_prefix, std::size_t order)
{
    const auto full = ks_prefix.appended(1);
    const auto lhs_egf = egf_coeffs(multi_stirling2_series(full, order));
    const auto prefix_egf = egf_coeffs(multi_stirling2_series(ks_prefix, order));

    const std::size_t last = order == 0 ? 0 : order - 1;
    std::vector<Rational> lhs(last + 1);
    std::vector<Rational> rhs(last + 1);
    for (std::size_t n = 0; n <= last && order > 0; ++n) {
        lhs[n] = lhs_egf[n + 1];
        Rational sum;
        for (std::size_t m = ks_prefix.size(); m <= n; ++m) {
            sum += Rational(binomial(n, m)) * prefix_egf[m];
        }
        rhs[n] = std::move(sum);
    }
    return compare_sequences("recurrence.multi-stirling2", ks_prefix.values(), {}, order, lhs, rhs, 0, last);
}

} // namespace multistirling
