#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace multistirling {

/**
 * Formal power series f(t) = c_0 + c_1 t + ... + c_N t^N with exact rational
 * coefficients, truncated at order N.
 *
 * Coefficients are stored in ordinary form; the exponential generating
 * function value n! c_n is produced on demand by egf_coeff(). Every binary
 * operation requires both operands to carry the same truncation order.
 * Values are immutable once built.
 */
class TruncatedSeries {
public:
    // The zero series of order `order`.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != order + 1) {
            throw usage_error("series of order " + std::to_string(order) + " needs " +
                              std::to_string(order + 1) + " coefficients, got " +
                              std::to_string(coeffs_.size()));
        }
    }

    static TruncatedSeries constant(std::size_t order, const Rational& c)
    {
        TruncatedSeries out(order);
        out.coeffs_[0] = c;
        return out;
    }

    static TruncatedSeries one(std::size_t order) { return constant(order, 1); }

    // c * t^k (zero if k > order).
    static TruncatedSeries monomial(std::size_t order, std::size_t k, const Rational& c = 1)
    {
        TruncatedSeries out(order);
        if (k <= order) {
            out.coeffs_[k] = c;
        }
        return out;
    }

    // Series whose EGF coefficients are a_0, ..., a_N, i.e. c_n = a_n / n!.
    static TruncatedSeries from_egf(std::size_t order, std::span<const Rational> egf)
    {
        if (egf.size() != order + 1) {
            throw usage_error("EGF coefficient list has wrong length");
        }
        std::vector<Rational> c(order + 1);
        for (std::size_t n = 0; n <= order; ++n) {
            c[n] = egf[n] / Rational(factorial(n));
        }
        return TruncatedSeries(order, std::move(c));
    }

    // exp(a t) = sum a^n t^n / n!
    static TruncatedSeries exp_linear(std::size_t order, const Rational& a = 1)
    {
        std::vector<Rational> c(order + 1);
        Rational term = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            c[n] = term;
            term = term * a / Rational(n + 1);
        }
        return TruncatedSeries(order, std::move(c));
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

    [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

    [[nodiscard]] const Rational& coeff(std::size_t n) const
    {
        if (n > order()) {
            throw range_error("coefficient index " + std::to_string(n) + " exceeds truncation order " +
                              std::to_string(order()));
        }
        return coeffs_[n];
    }

    // Index of the first nonzero coefficient; empty for the zero series.
    [[nodiscard]] std::optional<std::size_t> valuation() const
    {
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (!coeffs_[n].is_zero()) {
                return n;
            }
        }
        return std::nullopt;
    }

    // The same series viewed at a lower truncation order.
    [[nodiscard]] TruncatedSeries truncate(std::size_t order) const
    {
        if (order > this->order()) {
            throw range_error("cannot raise truncation order by truncating");
        }
        return TruncatedSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

namespace detail {

inline void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op)
{
    if (a.order() != b.order()) {
        throw usage_error(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
    }
}

} // namespace detail

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    detail::require_same_order(a, b, "series_add");
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        c[n] = a[n] + b[n];
    }
    return TruncatedSeries(a.order(), std::move(c));
}

inline TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    detail::require_same_order(a, b, "series_sub");
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        c[n] = a[n] - b[n];
    }
    return TruncatedSeries(a.order(), std::move(c));
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s)
{
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        c[n] = a[n] * s;
    }
    return TruncatedSeries(a.order(), std::move(c));
}

// Cauchy product truncated at the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    detail::require_same_order(a, b, "series_mul");
    const std::size_t order = a.order();
    const std::size_t va = a.valuation().value_or(order + 1);
    const std::size_t vb = b.valuation().value_or(order + 1);
    std::vector<Rational> c(order + 1);
    for (std::size_t n = va + vb; n <= order; ++n) {
        Rational sum;
        for (std::size_t i = va; i + vb <= n; ++i) {
            sum += a[i] * b[n - i];
        }
        c[n] = std::move(sum);
    }
    return TruncatedSeries(order, std::move(c));
}

// a^k by repeated squaring; a^0 = 1.
inline TruncatedSeries series_pow(const TruncatedSeries& a, std::size_t k)
{
    TruncatedSeries result = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (k > 0) {
        if (k & 1U) {
            result = series_mul(result, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

// Formal derivative; the result has truncation order N - 1 (N >= 1).
inline TruncatedSeries series_derivative(const TruncatedSeries& a)
{
    if (a.order() == 0) {
        throw range_error("derivative of an order-0 series has no coefficients");
    }
    std::vector<Rational> c(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        c[n - 1] = a[n] * Rational(n);
    }
    return TruncatedSeries(a.order() - 1, std::move(c));
}

// exp(a) for a with zero constant term, from (exp a)' = a' exp a:
//   n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
inline TruncatedSeries series_exp(const TruncatedSeries& a)
{
    if (!a[0].is_zero()) {
        throw domain_error("series_exp: constant term must be zero");
    }
    const std::size_t order = a.order();
    std::vector<Rational> b(order + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational sum;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!a[k].is_zero()) {
                sum += Rational(k) * a[k] * b[n - k];
            }
        }
        b[n] = sum / Rational(n);
    }
    return TruncatedSeries(order, std::move(b));
}

// log(a) for a with constant term 1, from a (log a)' = a':
//   n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}.
inline TruncatedSeries series_log_unit(const TruncatedSeries& a)
{
    if (a[0] != Rational(1)) {
        throw domain_error("series_log_unit: constant term must be 1");
    }
    const std::size_t order = a.order();
    std::vector<Rational> b(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational sum = Rational(n) * a[n];
        for (std::size_t k = 1; k < n; ++k) {
            if (!b[k].is_zero()) {
                sum -= Rational(k) * b[k] * a[n - k];
            }
        }
        b[n] = sum / Rational(n);
    }
    return TruncatedSeries(order, std::move(b));
}

// Multiplicative inverse; requires a nonzero constant term.
inline TruncatedSeries series_inv_unit(const TruncatedSeries& a)
{
    if (a[0].is_zero()) {
        throw domain_error("series_inv_unit: constant term must be nonzero");
    }
    const std::size_t order = a.order();
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> b(order + 1);
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational sum;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!a[k].is_zero()) {
                sum += a[k] * b[n - k];
            }
        }
        b[n] = -sum * inv0;
    }
    return TruncatedSeries(order, std::move(b));
}

// outer(inner(t)) by Horner's scheme; inner must have zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner)
{
    detail::require_same_order(outer, inner, "series_compose");
    if (!inner[0].is_zero()) {
        throw domain_error("series_compose: inner series must have zero constant term");
    }
    const std::size_t order = outer.order();
    TruncatedSeries result = TruncatedSeries::constant(order, outer[order]);
    for (std::size_t n = order; n-- > 0;) {
        result = series_mul(result, inner);
        std::vector<Rational> c(result.coeffs().begin(), result.coeffs().end());
        c[0] += outer[n];
        result = TruncatedSeries(order, std::move(c));
    }
    return result;
}

/**
 * num / den where den has valuation exactly v and num has valuation >= v.
 *
 * Both series are shifted down by v before inverting, so only the first
 * N - v coefficients of the quotient are determined; the result carries
 * truncation order N - v.
 */
inline TruncatedSeries series_div_valuated(const TruncatedSeries& num, const TruncatedSeries& den, std::size_t v)
{
    detail::require_same_order(num, den, "series_div_valuated");
    const std::size_t order = num.order();
    if (v > order) {
        throw domain_error("series_div_valuated: valuation exceeds truncation order");
    }
    if (den.valuation() != std::optional<std::size_t>(v)) {
        throw domain_error("series_div_valuated: denominator valuation is not " + std::to_string(v));
    }
    for (std::size_t n = 0; n < v; ++n) {
        if (!num[n].is_zero()) {
            throw domain_error("series_div_valuated: numerator valuation below " + std::to_string(v));
        }
    }
    const std::size_t out_order = order - v;
    std::vector<Rational> ns(num.coeffs().begin() + static_cast<std::ptrdiff_t>(v), num.coeffs().end());
    std::vector<Rational> ds(den.coeffs().begin() + static_cast<std::ptrdiff_t>(v), den.coeffs().end());
    return series_mul(TruncatedSeries(out_order, std::move(ns)),
                      series_inv_unit(TruncatedSeries(out_order, std::move(ds))));
}

// n! c_n
inline Rational egf_coeff(const TruncatedSeries& a, std::size_t n)
{
    return a.coeff(n) * Rational(factorial(n));
}

// All EGF coefficients a_0, ..., a_N.
inline std::vector<Rational> egf_coeffs(const TruncatedSeries& a)
{
    std::vector<Rational> out(a.order() + 1);
    mpz_class fact = 1;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (n > 0) {
            fact *= static_cast<unsigned long>(n);
        }
        out[n] = a[n] * Rational(fact);
    }
    return out;
}

// Commonly needed inner series.

// e^t - 1
inline TruncatedSeries exp_minus_one(std::size_t order)
{
    auto s = TruncatedSeries::exp_linear(order);
    return series_sub(s, TruncatedSeries::one(order));
}

// -log(1 - t) = sum_{m>=1} t^m / m
inline TruncatedSeries neg_log_one_minus(std::size_t order)
{
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 1; m <= order; ++m) {
        c[m] = Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(m)));
    }
    return TruncatedSeries(order, std::move(c));
}

// 1 - e^{-t}
inline TruncatedSeries one_minus_exp_neg(std::size_t order)
{
    return series_sub(TruncatedSeries::one(order), TruncatedSeries::exp_linear(order, -1));
}

// 1 - e^{1 - g} for g with constant term 1.
inline TruncatedSeries one_minus_exp_one_minus(const TruncatedSeries& g)
{
    if (g[0] != Rational(1)) {
        throw domain_error("inner generating function must have constant term 1");
    }
    const auto one = TruncatedSeries::one(g.order());
    return series_sub(one, series_exp(series_sub(one, g)));
}

} // namespace multistirling
