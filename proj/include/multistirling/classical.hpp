#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace multistirling {

enum class NumberKind { stirling1_unsigned, stirling2, lah_unsigned };

/**
 * Triangular table T(n, k), 0 <= k <= n <= N, of one classical family.
 * Entries with k > n read as zero. Built once, read-only afterwards.
 */
class NumberTable {
public:
    NumberTable(NumberKind kind, std::size_t max_n) : kind_(kind), rows_(max_n + 1)
    {
        for (std::size_t n = 0; n <= max_n; ++n) {
            rows_[n].resize(n + 1);
        }
        rows_[0][0] = 1;
        switch (kind) {
        case NumberKind::stirling1_unsigned:
            // [n+1, k] = [n, k-1] + n [n, k]
            for (std::size_t n = 0; n < max_n; ++n) {
                for (std::size_t k = 1; k <= n + 1; ++k) {
                    rows_[n + 1][k] = at(n, k - 1) + Rational(n) * at(n, k);
                }
            }
            break;
        case NumberKind::stirling2:
            // {n+1, k} = {n, k-1} + k {n, k}
            for (std::size_t n = 0; n < max_n; ++n) {
                for (std::size_t k = 1; k <= n + 1; ++k) {
                    rows_[n + 1][k] = at(n, k - 1) + Rational(k) * at(n, k);
                }
            }
            break;
        case NumberKind::lah_unsigned:
            // L(n, k) = C(n-1, k-1) n! / k!
            for (std::size_t n = 1; n <= max_n; ++n) {
                for (std::size_t k = 1; k <= n; ++k) {
                    rows_[n][k] = Rational(mpz_class(binomial(n - 1, k - 1) * factorial(n) / factorial(k)));
                }
            }
            break;
        }
    }

    [[nodiscard]] NumberKind kind() const { return kind_; }
    [[nodiscard]] std::size_t max_n() const { return rows_.size() - 1; }

    [[nodiscard]] Rational at(std::size_t n, std::size_t k) const
    {
        if (n > max_n()) {
            throw range_error("number table row out of range");
        }
        return k > n ? Rational(0) : rows_[n][k];
    }

private:
    NumberKind kind_;
    std::vector<std::vector<Rational>> rows_;
};

namespace detail {

// Process-wide memo per family; grows to the largest n requested.
inline std::shared_ptr<const NumberTable> cached_table(NumberKind kind, std::size_t n)
{
    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const NumberTable> table;
    };
    static Cache caches[3];
    Cache& cache = caches[static_cast<int>(kind)];
    std::lock_guard lock(cache.mutex);
    if (!cache.table || cache.table->max_n() < n) {
        const std::size_t target = std::max<std::size_t>(n, cache.table ? 2 * cache.table->max_n() : 16);
        cache.table = std::make_shared<const NumberTable>(kind, target);
    }
    return cache.table;
}

} // namespace detail

inline Rational stirling1_unsigned(std::size_t n, std::size_t k)
{
    return detail::cached_table(NumberKind::stirling1_unsigned, n)->at(n, k);
}

inline Rational stirling2(std::size_t n, std::size_t k)
{
    return detail::cached_table(NumberKind::stirling2, n)->at(n, k);
}

inline Rational lah_unsigned(std::size_t n, std::size_t k)
{
    return detail::cached_table(NumberKind::lah_unsigned, n)->at(n, k);
}

/**
 * EGF of the higher-order Bernoulli numbers, (t / (e^t - 1))^r, truncated
 * at `order`. The division by a valuation-r series is done at order + r.
 */
inline TruncatedSeries bernoulli_higher_series(std::size_t r, std::size_t order)
{
    const std::size_t work = order + r;
    const auto num = TruncatedSeries::monomial(work, r);
    const auto den = series_pow(exp_minus_one(work), r);
    return series_div_valuated(num, den, r);
}

// B_n^{(r)}
inline Rational bernoulli_higher(std::size_t n, std::size_t r, std::size_t order)
{
    if (n > order) {
        throw range_error("bernoulli_higher: n exceeds truncation order");
    }
    return egf_coeff(bernoulli_higher_series(r, order), n);
}

} // namespace multistirling
