#ifndef VARPHRAGMEN_NUMBER_HPP
#define VARPHRAGMEN_NUMBER_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace varphragmen {

// Expression templates are off so that `auto` locals hold values, not
// dangling expression nodes.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Decimal digits only; leading zeros are dropped because GMP reads a
// leading 0 as an octal prefix.
inline Integer from_digits(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer{std::string(digits)};
}

inline std::optional<Integer> parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    Integer v = from_digits(s);
    return negative ? Integer(-v) : v;
}

inline Integer pow10(unsigned n) {
    Integer r = 1;
    for (unsigned i = 0; i < n; ++i) r *= 10;
    return r;
}

} // namespace detail

/// Parses `p` or `p/q` (optionally signed, q > 0) into an exact rational.
inline std::optional<Rational> parse_fraction(std::string_view text) {
    text = detail::trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = detail::parse_integer(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto num = detail::parse_integer(detail::trim(text.substr(0, slash)));
    auto den_text = detail::trim(text.substr(slash + 1));
    if (!num || !detail::all_digits(den_text)) return std::nullopt;
    Integer den = detail::from_digits(den_text);
    if (den == 0) return std::nullopt;
    return Rational(*num, den);
}

/// Like parse_fraction, but also accepts a finite decimal such as `0.376`,
/// converted exactly (0.376 -> 47/125).
inline std::optional<Rational> parse_number(std::string_view text) {
    text = detail::trim(text);
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse_fraction(text);
    if (text.find('/') != std::string_view::npos) return std::nullopt;
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
        negative = whole.front() == '-';
        whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !detail::all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !detail::all_digits(frac)) return std::nullopt;
    Integer digits = detail::from_digits(std::string(whole) + std::string(frac));
    Rational v(digits, detail::pow10(static_cast<unsigned>(frac.size())));
    return negative ? Rational(-v) : v;
}

/// Decimal rendering with round-half-to-even at `decimals` places. A value
/// that rounds to zero prints without a sign.
inline std::string format_decimal(const Rational& value, int decimals) {
    if (decimals < 1) decimals = 1;
    const Integer scale = detail::pow10(static_cast<unsigned>(decimals));
    const Integer p = boost::multiprecision::numerator(value) * scale;
    const Integer q = boost::multiprecision::denominator(value);
    // Floor division (q > 0).
    Integer n = p / q;
    Integer rem = p - n * q;
    if (rem < 0) {
        n -= 1;
        rem += q;
    }
    const Integer twice = rem * 2;
    if (twice > q || (twice == q && boost::multiprecision::bit_test(
                                        Integer(boost::multiprecision::abs(n)), 0)))
        n += 1;

    const bool negative = n < 0;
    const Integer a = boost::multiprecision::abs(n);
    std::string int_part = Integer(a / scale).str();
    std::string frac_part = Integer(a % scale).str();
    if (frac_part.size() < static_cast<std::size_t>(decimals))
        frac_part.insert(0, static_cast<std::size_t>(decimals) - frac_part.size(), '0');
    return (negative ? "-" : "") + int_part + "." + frac_part;
}

/// Conversions between the exact rational type and a computation scalar.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& v) { return v; }
    static Rational to_rational(const Rational& v) { return v; }
    static std::string exact_string(const Rational& v) { return v.str(); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static bool is_negative(const Rational& v) { return v < 0; }
    static bool approx_equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr double tolerance = 1e-9;
    static double from_rational(const Rational& v) { return v.convert_to<double>(); }
    static Rational to_rational(double v) { return Rational(v); }
    static std::string exact_string(double v) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }
    static bool is_zero(double v) { return v == 0.0; }
    static bool is_negative(double v) { return v < 0.0; }
    static bool approx_equal(double a, double b) {
        return std::abs(a - b) <= tolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    }
};

template <class T>
std::string format_decimal(const T& value, int decimals) {
    return format_decimal(scalar_traits<T>::to_rational(value), decimals);
}

} // namespace varphragmen

#endif // VARPHRAGMEN_NUMBER_HPP
