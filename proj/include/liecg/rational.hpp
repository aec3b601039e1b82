#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace liecg {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (cpp_rational canonicalizes on construction).
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "n" (optional sign, arbitrary precision).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

/// Emits "p/q", or just "p" for integers. Inverse of parse_rational.
inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace liecg
