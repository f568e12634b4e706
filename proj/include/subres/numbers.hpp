#pragma once

// Exact scalar types: arbitrary-precision integers and normalized rationals,
// plus strict decimal-string (de)serialization and small-prime testing.
//
// Integer is boost::multiprecision::cpp_int; Rational is cpp_rational, which
// keeps gcd(numerator, denominator) = 1 and denominator > 0 after every
// operation, so exact-equality comparisons are meaningful.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace subres {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

// "7/3", "-123"; a denominator of 1 is omitted.
inline std::string to_string(const Rational& v) { return v.str(); }

namespace detail {

inline bool all_decimal_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

} // namespace detail

// Accepts an optional leading '-' followed by decimal digits. No whitespace,
// no '+', no hex/octal prefixes, no exponent notation.
inline Integer parse_integer(std::string_view s) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (!detail::all_decimal_digits(digits))
        throw std::invalid_argument("not a decimal integer: \"" + std::string(s) + "\"");
    Integer v{std::string(digits)};
    return negative ? Integer(-v) : v;
}

// "n" or "n/d" with n a decimal integer and d a positive decimal integer.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    std::string_view den_part = s.substr(slash + 1);
    if (!detail::all_decimal_digits(den_part))
        throw std::invalid_argument("not a decimal rational: \"" + std::string(s) + "\"");
    Integer den{std::string(den_part)};
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: \"" + std::string(s) + "\"");
    return Rational(num, den);
}

// Deterministic trial division; intended for desk-scale moduli.
inline bool is_prime(const Integer& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0 || p % 3 == 0) return false;
    Integer f = 5;
    while (f * f <= p) {
        if (p % f == 0 || p % (f + 2) == 0) return false;
        f += 6;
    }
    return true;
}

} // namespace subres
