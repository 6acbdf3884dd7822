#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace multistirling {

enum class CheckStatus { pass, fail, skipped, expected_discrepancy };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::expected_discrepancy: return "expected-discrepancy";
    }
    return "unknown";
}

struct Mismatch {
    std::size_t n = 0;
    Rational lhs;
    Rational rhs;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/**
 * Outcome of checking one identity at one grid point.
 *
 * `first_mismatch` is present exactly when status is fail or
 * expected_discrepancy. `ks` is empty for checks that take no index tuple
 * and `dist` is empty for deterministic checks.
 */
struct VerificationReport {
    std::string identity;
    std::vector<int> ks;
    std::string dist;
    std::size_t order = 0;
    CheckStatus status = CheckStatus::pass;
    std::optional<Mismatch> first_mismatch;
    std::string note;

    [[nodiscard]] bool passed() const { return status == CheckStatus::pass; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/**
 * Compares lhs[n] and rhs[n] for n in [from, to] and records the first
 * difference. Both spans must cover index `to`.
 */
inline VerificationReport compare_sequences(std::string identity, std::vector<int> ks, std::string dist,
                                            std::size_t order, std::span<const Rational> lhs,
                                            std::span<const Rational> rhs, std::size_t from, std::size_t to)
{
    VerificationReport report{std::move(identity), std::move(ks), std::move(dist), order,
                              CheckStatus::pass, std::nullopt, {}};
    if (to >= lhs.size() || to >= rhs.size()) {
        throw range_error(report.identity + ": comparison range exceeds computed values");
    }
    for (std::size_t n = from; n <= to; ++n) {
        if (lhs[n] != rhs[n]) {
            report.status = CheckStatus::fail;
            report.first_mismatch = Mismatch{n, lhs[n], rhs[n]};
            break;
        }
    }
    return report;
}

} // namespace multistirling
