// SPDX-License-Identifier: Apache-2.0
//
// Exact rational arithmetic on 64-bit numerator/denominator pairs.
// Overflow throws; nothing ever wraps or rounds silently.

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>

#include "fdx/errors.hpp"

namespace fdx {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("rational addition overflows 64 bits");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("rational subtraction overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("rational multiplication overflows 64 bits");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN)
        throw OverflowError("rational negation overflows 64 bits");
    return -a;
}

} // namespace detail

/// Exact rational number p/q, always stored normalized (q >= 1, gcd(|p|, q) = 1).
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit by design

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0)
            throw Error("rational with zero denominator");
        if (n == INT64_MIN || d == INT64_MIN)
            throw OverflowError("rational endpoint at INT64_MIN is not representable");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n, d);
        num_ = n / g;
        den_ = d / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t bd = b.den_ / g;
        const std::int64_t lhs = detail::checked_mul(a.num_, bd);
        const std::int64_t rhs = detail::checked_mul(b.num_, a.den_ / g);
        return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(a.den_, bd));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t bd = b.den_ / g;
        const std::int64_t lhs = detail::checked_mul(a.num_, bd);
        const std::int64_t rhs = detail::checked_mul(b.num_, a.den_ / g);
        return Rational(detail::checked_sub(lhs, rhs), detail::checked_mul(a.den_, bd));
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw Error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Comparisons go through 128-bit cross products, so they never overflow.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Accepts "p/q", integers, and plain decimals ("-0.35", "2.6e-1").
    static Rational parse(std::string_view text);

    /// "p/q", or just "p" for integers.
    std::string to_string() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Exact decimal expansion when the denominator is of the form 2^a 5^b
    /// (up to 18 fraction digits); otherwise falls back to "p/q".
    std::string to_decimal_string() const;

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// (x)+ clamp: max(x, 0).
inline Rational pos_part(const Rational& x) { return x.is_negative() ? Rational(0) : x; }

inline Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }

namespace detail {

inline std::int64_t parse_int64(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw OverflowError("number '" + std::string(whole) + "' overflows 64 bits");
    if (ec != std::errc() || ptr != last)
        throw ParseError("malformed number '" + std::string(whole) + "'");
    return value;
}

inline std::int64_t pow10_checked(int k, std::string_view whole) {
    std::int64_t p = 1;
    for (int i = 0; i < k; ++i)
        p = checked_mul(p, 10);
    (void)whole;
    return p;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty number");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t p = detail::parse_int64(text.substr(0, slash), text);
        const std::int64_t q = detail::parse_int64(text.substr(slash + 1), text);
        if (q == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }

    // Decimal form: [sign] digits [. digits] [e[sign]digits]
    std::string_view rest = text;
    bool negative = false;
    if (rest.front() == '+' || rest.front() == '-') {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    std::int64_t exponent = 0;
    if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = rest.substr(e + 1);
        if (!exp_text.empty() && exp_text.front() == '+')
            exp_text.remove_prefix(1);
        exponent = detail::parse_int64(exp_text, text);
        if (exponent > 1000 || exponent < -1000)
            throw OverflowError("exponent in '" + std::string(text) + "' is out of range");
        rest = rest.substr(0, e);
    }
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false;
    for (const char c : rest) {
        if (c == '.') {
            if (seen_dot)
                throw ParseError("malformed number '" + std::string(text) + "'");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw ParseError("malformed number '" + std::string(text) + "'");
        digits.push_back(c);
        if (seen_dot)
            ++frac_digits;
    }
    if (digits.empty())
        throw ParseError("malformed number '" + std::string(text) + "'");

    std::int64_t mantissa = 0;
    for (const char c : digits) {
        mantissa = detail::checked_mul(mantissa, 10);
        mantissa = detail::checked_add(mantissa, c - '0');
    }
    if (negative)
        mantissa = detail::checked_neg(mantissa);

    const std::int64_t scale = frac_digits - exponent; // value = mantissa / 10^scale
    if (scale >= 0)
        return Rational(mantissa, detail::pow10_checked(static_cast<int>(scale), text));
    return Rational(
        detail::checked_mul(mantissa, detail::pow10_checked(static_cast<int>(-scale), text)), 1);
}

inline std::string Rational::to_decimal_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    const int k = twos > fives ? twos : fives;
    if (d != 1 || k > 18)
        return to_string();

    __int128 scaled = num_;
    for (int i = 0; i < k; ++i)
        scaled *= 10;
    scaled /= den_;

    const bool neg = scaled < 0;
    if (neg)
        scaled = -scaled;
    std::string body;
    for (int i = 0; i < k || scaled > 0; ++i) {
        body.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
        if (i + 1 == k)
            body.push_back('.');
    }
    if (body.back() == '.')
        body.push_back('0');
    std::string out(body.rbegin(), body.rend());
    while (out.back() == '0')
        out.pop_back();
    if (out.back() == '.')
        out.pop_back();
    return neg ? "-" + out : out;
}

/// lcm with overflow detection; both arguments must be positive.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    const std::int64_t g = std::gcd(a, b);
    return detail::checked_mul(a / g, b);
}

} // namespace fdx
