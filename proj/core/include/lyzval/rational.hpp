#ifndef LYZVAL_RATIONAL_HPP
#define LYZVAL_RATIONAL_HPP

// Scalar layer. The library is templated on a scalar type S that is either
// Rat (exact arbitrary-precision rationals) or double (IEEE with a fixed
// relative tolerance). scalar_traits<S> is the single point where the two
// modes differ: comparisons, parsing and printing all go through it.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "lyzval/errors.hpp"

namespace lyzval {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Float-mode comparison tolerance, relative with floor 1.
inline constexpr double kFloatTolerance = 1e-9;

namespace detail {

// Parses an optionally signed decimal integer, rejecting junk.
inline BigInt parse_bigint(std::string_view s) {
    if (s.empty())
        throw ParseError("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size())
        throw ParseError("sign without digits in integer literal");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("invalid character in integer literal: '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

} // namespace detail

// Parses "p" or "p/q" into a canonical rational. The denominator sign is
// normalized here because cpp_rational's two-argument constructor rejects
// negative denominators.
inline Rat parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(detail::parse_bigint(s));
    BigInt p = detail::parse_bigint(s.substr(0, slash));
    BigInt q = detail::parse_bigint(s.substr(slash + 1));
    if (q == 0)
        throw ParseError("zero denominator in rational literal: '" + std::string(s) + "'");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rat(p, q);
}

// Prints a canonical rational as "p" or "p/q" (q > 1 only when needed).
inline std::string to_string(const Rat& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;

    static bool eq(const Rat& a, const Rat& b) { return a == b; }
    static bool is_zero(const Rat& a) { return a.is_zero(); }
    static int sign(const Rat& a) { return a.sign(); }

    static Rat from_int(long v) { return Rat(v); }
    static Rat from_rational(const Rat& r) { return r; }
    static Rat parse(std::string_view s) { return parse_rational(s); }
    static std::string str(const Rat& a) { return to_string(a); }
    static double to_double(const Rat& a) { return a.template convert_to<double>(); }
    static Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr double tolerance = kFloatTolerance;

    // Relative comparison with floor 1: values below tolerance in magnitude
    // are zero, which is the documented absolute 1e-9 on normalized data.
    static bool eq(double a, double b) {
        return std::abs(a - b) <= tolerance * std::max({1.0, std::abs(a), std::abs(b)});
    }
    static bool is_zero(double a) { return std::abs(a) <= tolerance; }
    static int sign(double a) { return is_zero(a) ? 0 : (a > 0 ? 1 : -1); }

    static double from_int(long v) { return static_cast<double>(v); }
    static double from_rational(const Rat& r) { return r.convert_to<double>(); }
    static double parse(std::string_view s) { return parse_rational(s).convert_to<double>(); }
    static std::string str(double a);
    static double to_double(double a) { return a; }
    static double abs(double a) { return std::abs(a); }
};

inline std::string scalar_traits<double>::str(double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

// Clears denominators and common factors: maps a nonzero rational vector to
// the unique primitive integer vector pointing the same way. Declared here,
// used by the geometry layer.
namespace detail {

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

} // namespace detail

} // namespace lyzval

#endif
