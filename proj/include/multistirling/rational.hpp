#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace multistirling {

/**
 * Exact rational number backed by GMP.
 *
 * Always stored in lowest terms with a positive denominator, so equality is
 * structural. Division by zero throws domain_error; nothing ever rounds.
 */
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rational(I value) : value_(static_cast<unsigned long>(value)) {}

    Rational(const mpz_class& integer) : value_(integer) {}

    Rational(const mpz_class& numerator, const mpz_class& denominator)
    {
        if (denominator == 0) {
            throw domain_error("rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    // Accepts `a` or `a/b`, where a is an optionally signed decimal integer and
    // b a positive decimal integer.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& mpq() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    // `a` for integers, `a/b` otherwise.
    [[nodiscard]] std::string str() const { return value_.get_str(10); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs)
    {
        if (rhs.is_zero()) {
            throw domain_error("rational division by zero");
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

private:
    mpq_class value_{0};
};

namespace detail {

inline bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
        num_digits.remove_prefix(1);
    }
    if (!detail::all_digits(num_digits)) {
        throw spec_error("malformed rational literal '" + std::string(text) + "'");
    }
    // mpz_class rejects a leading '+'.
    std::string num_str = num.front() == '+' ? std::string(num.substr(1)) : std::string(num);
    mpz_class n(num_str, 10);
    if (slash == std::string_view::npos) {
        return Rational(n);
    }
    if (!detail::all_digits(den)) {
        throw spec_error("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw spec_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

// x^e for any integer e; x must be nonzero when e < 0.
inline Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x.is_zero()) {
            throw domain_error("zero raised to a negative power");
        }
        return Rational(1) / pow(x, -e);
    }
    const auto ue = static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.mpq().get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), x.mpq().get_den_mpz_t(), ue);
    return Rational(num, den);
}

inline mpz_class factorial(std::size_t n)
{
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// C(n, k), zero when k > n.
inline mpz_class binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// (-1)^e
inline int minus_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace multistirling
