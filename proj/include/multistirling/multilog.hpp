#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "series.hpp"

namespace multistirling {

/// Multi-index (k_1, ..., k_r) with r >= 1. Entries may be any integers.
class IndexTuple {
public:
    IndexTuple(std::initializer_list<int> ks) : IndexTuple(std::vector<int>(ks)) {}

    explicit IndexTuple(std::vector<int> ks) : ks_(std::move(ks))
    {
        if (ks_.empty()) {
            throw usage_error("index tuple must have at least one entry");
        }
    }

    // (1, 1, ..., 1) of length r.
    static IndexTuple ones(std::size_t r) { return IndexTuple(std::vector<int>(r, 1)); }

    // Comma-separated integers, e.g. "1,2,3".
    static IndexTuple parse(std::string_view text)
    {
        std::vector<int> ks;
        std::size_t pos = 0;
        while (true) {
            const auto comma = text.find(',', pos);
            const auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            std::string s(item);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(s, &used);
            } catch (const std::exception&) {
                throw spec_error("malformed index tuple '" + std::string(text) + "'");
            }
            if (used != s.size() || s.empty() || s.front() == ' ') {
                throw spec_error("malformed index tuple '" + std::string(text) + "'");
            }
            ks.push_back(value);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        return IndexTuple(std::move(ks));
    }

    [[nodiscard]] std::size_t size() const { return ks_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return ks_[i]; }
    [[nodiscard]] int back() const { return ks_.back(); }
    [[nodiscard]] const std::vector<int>& values() const { return ks_; }
    [[nodiscard]] auto begin() const { return ks_.begin(); }
    [[nodiscard]] auto end() const { return ks_.end(); }

    [[nodiscard]] bool all_ones() const
    {
        for (int k : ks_) {
            if (k != 1) {
                return false;
            }
        }
        return true;
    }

    // (k_1, ..., k_r, k)
    [[nodiscard]] IndexTuple appended(int k) const
    {
        auto ks = ks_;
        ks.push_back(k);
        return IndexTuple(std::move(ks));
    }

    [[nodiscard]] std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < ks_.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(ks_[i]);
        }
        return out;
    }

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

private:
    std::vector<int> ks_;
};

namespace detail {

// m^{-k}
inline Rational inverse_power(std::size_t m, int k)
{
    return pow(Rational(m), -static_cast<long>(k));
}

inline TruncatedSeries multilog_from_prefix(std::span<const int> ks, std::size_t order)
{
    // level[m] holds S_j(m), the sum over chains 0 < m_1 < ... < m_j = m.
    std::vector<Rational> level(order + 1);
    for (std::size_t m = 1; m <= order; ++m) {
        level[m] = inverse_power(m, ks[0]);
    }
    for (std::size_t j = 1; j < ks.size(); ++j) {
        std::vector<Rational> next(order + 1);
        Rational prefix;  // sum_{m' < m} S_{j-1}(m')
        for (std::size_t m = 1; m <= order; ++m) {
            if (!prefix.is_zero()) {
                next[m] = inverse_power(m, ks[j]) * prefix;
            }
            prefix += level[m];
        }
        level = std::move(next);
    }
    return TruncatedSeries(order, std::move(level));
}

} // namespace detail

/**
 * Li_{k_1,...,k_r}(t) = sum over 0 < m_1 < ... < m_r of
 * t^{m_r} / (m_1^{k_1} ... m_r^{k_r}), truncated at `order`.
 *
 * Uses the prefix-sum recursion S_1(m) = m^{-k_1},
 * S_j(m) = m^{-k_j} sum_{m' < m} S_{j-1}(m'), in O(r N) rational operations.
 * Coefficients of t^0 .. t^{r-1} are zero.
 */
inline TruncatedSeries multilog_series(const IndexTuple& ks, std::size_t order)
{
    return detail::multilog_from_prefix(ks.values(), order);
}

/**
 * Unsigned multi-Stirling number of the first kind: n! [t^n] Li_{ks}(t).
 * Zero for n < r; non-integral in general.
 */
inline Rational multi_stirling1(const IndexTuple& ks, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("multi_stirling1: n exceeds truncation order");
    }
    return egf_coeff(multilog_series(ks, order), n);
}

/**
 * Checks the two derivative recurrences of the multiple logarithm up to
 * order N - 1:
 *   d/dt Li_{..., k_r}(t) = Li_{..., k_r - 1}(t) / t          (any k_r)
 *   d/dt Li_{..., k_{r-1}, 1}(t) = Li_{k_1..k_{r-1}}(t) / (1 - t)   (k_r = 1)
 * For r = 1 the empty-prefix multiple logarithm is the constant 1.
 * Returns one report for the shift branch and, when k_r = 1, one for the
 * unit branch.
 */
inline std::vector<VerificationReport> check_derivative_recurrence(const IndexTuple& ks, std::size_t order)
{
    std::vector<VerificationReport> reports;
    if (order == 0) {
        return reports;
    }
    const auto li = multilog_series(ks, order);
    const auto lhs = series_derivative(li);

    auto lowered = ks.values();
    lowered.back() -= 1;
    const auto li_lowered = detail::multilog_from_prefix(lowered, order);
    const auto rhs_shift = series_div_valuated(li_lowered, TruncatedSeries::monomial(order, 1), 1);
    reports.push_back(compare_sequences("multilog.derivative", ks.values(), {}, order, lhs.coeffs(),
                                        rhs_shift.coeffs(), 0, order - 1));

    if (ks.back() == 1) {
        const std::size_t lower = order - 1;
        TruncatedSeries prefix_li = TruncatedSeries::one(lower);
        if (ks.size() > 1) {
            const std::vector<int> prefix(ks.begin(), ks.end() - 1);
            prefix_li = detail::multilog_from_prefix(prefix, lower);
        }
        const auto geometric = series_inv_unit(
            series_sub(TruncatedSeries::one(lower), TruncatedSeries::monomial(lower, 1)));
        const auto rhs_unit = series_mul(geometric, prefix_li);
        reports.push_back(compare_sequences("multilog.derivative-unit-last", ks.values(), {}, order,
                                            lhs.coeffs(), rhs_unit.coeffs(), 0, lower));
    }
    return reports;
}

} // namespace multistirling
