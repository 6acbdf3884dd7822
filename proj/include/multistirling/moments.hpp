#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "classical.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace multistirling {

/// Exact raw moments mu_0, ..., mu_N of a random variable Y, with mu_0 = 1.
class MomentSequence {
public:
    explicit MomentSequence(std::vector<Rational> mu) : mu_(std::move(mu))
    {
        if (mu_.empty() || mu_[0] != Rational(1)) {
            throw spec_error("moment sequence must start with mu_0 = 1");
        }
    }

    [[nodiscard]] std::size_t order() const { return mu_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t n) const { return mu_[n]; }
    [[nodiscard]] std::span<const Rational> values() const { return mu_; }

    [[nodiscard]] const Rational& mu(std::size_t n) const
    {
        if (n > order()) {
            throw range_error("moment of order " + std::to_string(n) + " not available");
        }
        return mu_[n];
    }

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
    std::vector<Rational> mu_;
};

namespace dist {

struct Point { Rational c; };
struct Bernoulli { Rational p; };
struct Binomial { unsigned long m; Rational p; };
struct Poisson { Rational lambda; };
// Number of failures before the first success, success probability q.
struct Geometric { Rational q; };
struct Finite { std::vector<std::pair<Rational, Rational>> atoms; };  // (x_i, w_i)
struct Raw { std::vector<Rational> mu; };

} // namespace dist

using DistributionSpec =
    std::variant<dist::Point, dist::Bernoulli, dist::Binomial, dist::Poisson, dist::Geometric, dist::Finite, dist::Raw>;

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto at = text.find(sep, pos);
        out.push_back(text.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
        if (at == std::string_view::npos) {
            return out;
        }
        pos = at + 1;
    }
}

inline void require_probability(const Rational& p, const char* what)
{
    if (p <= Rational(0) || p > Rational(1)) {
        throw spec_error(std::string(what) + " parameter must lie in (0, 1], got " + p.str());
    }
}

} // namespace detail

// Throws spec_error when the parameters violate the family's constraints.
inline void validate(const DistributionSpec& spec)
{
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, dist::Bernoulli>) {
                detail::require_probability(d.p, "bernoulli");
            } else if constexpr (std::is_same_v<T, dist::Binomial>) {
                if (d.m == 0) {
                    throw spec_error("binomial trial count must be positive");
                }
                detail::require_probability(d.p, "binomial");
            } else if constexpr (std::is_same_v<T, dist::Geometric>) {
                detail::require_probability(d.q, "geometric");
            } else if constexpr (std::is_same_v<T, dist::Poisson>) {
                if (d.lambda < Rational(0)) {
                    throw spec_error("poisson rate must be non-negative");
                }
            } else if constexpr (std::is_same_v<T, dist::Finite>) {
                if (d.atoms.empty()) {
                    throw spec_error("finite distribution needs at least one atom");
                }
                Rational total;
                for (const auto& [x, w] : d.atoms) {
                    if (w < Rational(0)) {
                        throw spec_error("finite distribution weight is negative");
                    }
                    total += w;
                }
                if (total != Rational(1)) {
                    throw spec_error("finite distribution weights sum to " + total.str() + ", not 1");
                }
            } else if constexpr (std::is_same_v<T, dist::Raw>) {
                if (d.mu.empty() || d.mu[0] != Rational(1)) {
                    throw spec_error("raw moment list must start with 1");
                }
            }
        },
        spec);
}

/**
 * Parses the textual grammar
 *   point:c  bernoulli:p  binomial:m,p  poisson:l  geometric:q
 *   finite:x1=w1;x2=w2;...  raw:mu0,mu1,...
 * where every number is an integer or an a/b literal. The result is
 * validated.
 */
inline DistributionSpec parse_distribution(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw spec_error("distribution spec '" + std::string(text) + "' lacks ':'");
    }
    const auto kind = text.substr(0, colon);
    const auto args = text.substr(colon + 1);
    const auto params = detail::split(args, ',');
    auto expect_count = [&](std::size_t count) {
        if (params.size() != count) {
            throw spec_error("distribution '" + std::string(kind) + "' expects " + std::to_string(count) +
                             " parameter(s)");
        }
    };

    DistributionSpec spec;
    if (kind == "point") {
        expect_count(1);
        spec = dist::Point{Rational::parse(params[0])};
    } else if (kind == "bernoulli") {
        expect_count(1);
        spec = dist::Bernoulli{Rational::parse(params[0])};
    } else if (kind == "binomial") {
        expect_count(2);
        const auto m = Rational::parse(params[0]);
        if (!m.is_integer() || m <= Rational(0) || !m.numerator().fits_ulong_p()) {
            throw spec_error("binomial trial count must be a positive integer");
        }
        spec = dist::Binomial{m.numerator().get_ui(), Rational::parse(params[1])};
    } else if (kind == "poisson") {
        expect_count(1);
        spec = dist::Poisson{Rational::parse(params[0])};
    } else if (kind == "geometric") {
        expect_count(1);
        spec = dist::Geometric{Rational::parse(params[0])};
    } else if (kind == "finite") {
        dist::Finite f;
        for (const auto atom : detail::split(args, ';')) {
            const auto eq = atom.find('=');
            if (eq == std::string_view::npos) {
                throw spec_error("finite atom '" + std::string(atom) + "' must be x=w");
            }
            f.atoms.emplace_back(Rational::parse(atom.substr(0, eq)), Rational::parse(atom.substr(eq + 1)));
        }
        spec = std::move(f);
    } else if (kind == "raw") {
        dist::Raw raw;
        for (const auto item : params) {
            raw.mu.push_back(Rational::parse(item));
        }
        spec = std::move(raw);
    } else {
        throw spec_error("unknown distribution kind '" + std::string(kind) + "'");
    }
    validate(spec);
    return spec;
}

// Canonical text form; parse_distribution(to_string(s)) reproduces s.
inline std::string to_string(const DistributionSpec& spec)
{
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, dist::Point>) {
                return "point:" + d.c.str();
            } else if constexpr (std::is_same_v<T, dist::Bernoulli>) {
                return "bernoulli:" + d.p.str();
            } else if constexpr (std::is_same_v<T, dist::Binomial>) {
                return "binomial:" + std::to_string(d.m) + "," + d.p.str();
            } else if constexpr (std::is_same_v<T, dist::Poisson>) {
                return "poisson:" + d.lambda.str();
            } else if constexpr (std::is_same_v<T, dist::Geometric>) {
                return "geometric:" + d.q.str();
            } else if constexpr (std::is_same_v<T, dist::Finite>) {
                std::string out = "finite:";
                for (std::size_t i = 0; i < d.atoms.size(); ++i) {
                    out += (i ? ";" : "") + d.atoms[i].first.str() + "=" + d.atoms[i].second.str();
                }
                return out;
            } else {
                std::string out = "raw:";
                for (std::size_t i = 0; i < d.mu.size(); ++i) {
                    out += (i ? "," : "") + d.mu[i].str();
                }
                return out;
            }
        },
        spec);
}

namespace detail {

// mu_n = sum_k {n, k} F_k from factorial moments F_k = E[(Y)_k].
inline std::vector<Rational> moments_from_factorial(const std::vector<Rational>& factorial_moments, std::size_t order)
{
    std::vector<Rational> mu(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational sum;
        for (std::size_t k = 0; k <= n; ++k) {
            sum += stirling2(n, k) * factorial_moments[k];
        }
        mu[n] = std::move(sum);
    }
    return mu;
}

} // namespace detail

/**
 * Exact raw moments mu_0..mu_N for a distribution spec. A raw list longer
 * than N + 1 is truncated; a shorter one is returned as is, and consumers
 * needing more moments report a range error.
 */
inline MomentSequence moments_from_spec(const DistributionSpec& spec, std::size_t order)
{
    validate(spec);
    return std::visit(
        [order](const auto& d) -> MomentSequence {
            using T = std::decay_t<decltype(d)>;
            std::vector<Rational> mu(order + 1);
            if constexpr (std::is_same_v<T, dist::Point>) {
                for (std::size_t n = 0; n <= order; ++n) {
                    mu[n] = pow(d.c, static_cast<long>(n));
                }
            } else if constexpr (std::is_same_v<T, dist::Bernoulli>) {
                mu[0] = 1;
                for (std::size_t n = 1; n <= order; ++n) {
                    mu[n] = d.p;
                }
            } else if constexpr (std::is_same_v<T, dist::Binomial>) {
                // E[(Y)_k] = (m)_k p^k
                std::vector<Rational> fm(order + 1);
                Rational falling = 1;
                for (std::size_t k = 0; k <= order; ++k) {
                    fm[k] = falling * pow(d.p, static_cast<long>(k));
                    falling *= Rational(static_cast<long>(d.m) - static_cast<long>(k));
                }
                mu = detail::moments_from_factorial(fm, order);
            } else if constexpr (std::is_same_v<T, dist::Poisson>) {
                // Touchard: mu_{n+1} = lambda sum_i C(n, i) mu_i
                mu[0] = 1;
                for (std::size_t n = 0; n < order; ++n) {
                    Rational sum;
                    for (std::size_t i = 0; i <= n; ++i) {
                        sum += Rational(binomial(n, i)) * mu[i];
                    }
                    mu[n + 1] = d.lambda * sum;
                }
            } else if constexpr (std::is_same_v<T, dist::Geometric>) {
                // E[(Y)_k] = k! ((1 - q) / q)^k
                const Rational ratio = (Rational(1) - d.q) / d.q;
                std::vector<Rational> fm(order + 1);
                for (std::size_t k = 0; k <= order; ++k) {
                    fm[k] = Rational(factorial(k)) * pow(ratio, static_cast<long>(k));
                }
                mu = detail::moments_from_factorial(fm, order);
            } else if constexpr (std::is_same_v<T, dist::Finite>) {
                for (std::size_t n = 0; n <= order; ++n) {
                    Rational sum;
                    for (const auto& [x, w] : d.atoms) {
                        sum += w * pow(x, static_cast<long>(n));
                    }
                    mu[n] = std::move(sum);
                }
            } else {
                const std::size_t kept = std::min(order + 1, d.mu.size());
                mu.assign(d.mu.begin(), d.mu.begin() + static_cast<std::ptrdiff_t>(kept));
            }
            return MomentSequence(std::move(mu));
        },
        spec);
}

/// M(t) = E[e^{Yt}] = sum mu_n t^n / n!
inline TruncatedSeries mgf_series(const MomentSequence& ms, std::size_t order)
{
    if (ms.order() < order) {
        throw range_error("mgf_series: only " + std::to_string(ms.order() + 1) + " moments available for order " +
                          std::to_string(order));
    }
    return TruncatedSeries::from_egf(order, ms.values().subspan(0, order + 1));
}

/// E[(1 - t)^{-Y}] = M(-log(1 - t))
inline TruncatedSeries resolvent_series(const MomentSequence& ms, std::size_t order)
{
    return series_compose(mgf_series(ms, order), neg_log_one_minus(order));
}

/// E[S_j^n] where S_j is a sum of j independent copies of Y.
inline Rational snk_moment(const MomentSequence& ms, std::size_t j, std::size_t n, std::size_t order)
{
    if (n > order) {
        throw range_error("snk_moment: n exceeds truncation order");
    }
    if (j == 0) {
        return n == 0 ? Rational(1) : Rational(0);
    }
    return egf_coeff(series_pow(mgf_series(ms, order), j), n);
}

} // namespace multistirling
