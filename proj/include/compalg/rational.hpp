#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace compalg {

/// Exact rational scalar. All algebraic identity checks run over this type;
/// doubles are only a convenience path for numeric residual reports.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical "p" or "p/q" rendering (q omitted when 1).
inline std::string to_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p", "p/q", "-p/q". Rejects q == 0 and trailing garbage.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&] {
        throw std::invalid_argument("not a rational: '" + text + "'");
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0);  // unreachable
}

/// Shortest decimal string that round-trips through double; used where the
/// wire format wants a decimal rather than p/q.
inline std::string to_decimal_string(const Rational& r) {
    const double v = to_double(r);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string to_decimal_string(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace compalg
