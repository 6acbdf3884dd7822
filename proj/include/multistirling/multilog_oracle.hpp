#pragma once

#include <cstddef>
#include <vector>

#include "multilog.hpp"
#include "rational.hpp"

namespace multistirling {

namespace detail {

// Sums 1/(m_1^{k_1} ... m_j^{k_j}) over chains m_1 < ... < m_j < bound,
// enumerated from the top entry downward.
inline Rational chain_sum(const IndexTuple& ks, std::size_t j, std::size_t bound)
{
    if (j == 0) {
        return 1;
    }
    Rational total;
    for (std::size_t m = j; m < bound; ++m) {
        total += pow(Rational(m), -static_cast<long>(ks[j - 1])) * chain_sum(ks, j - 1, m);
    }
    return total;
}

} // namespace detail

/**
 * [t^m] Li_{ks}(t) by literal enumeration of every chain
 * 0 < m_1 < ... < m_{r-1} < m_r = m. Exponential in r; intended as an
 * independent reference for multilog_series.
 */
inline Rational multilog_oracle(const IndexTuple& ks, std::size_t m)
{
    if (m == 0) {
        return 0;
    }
    const std::size_t r = ks.size();
    return pow(Rational(m), -static_cast<long>(ks[r - 1])) * detail::chain_sum(ks, r - 1, m);
}

} // namespace multistirling
