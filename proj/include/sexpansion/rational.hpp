#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sexpansion/error.hpp"

namespace sexpansion {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Every coefficient in this library is one of these; no
/// operation ever rounds.
using Rational = boost::multiprecision::cpp_rational;

/// Formats a rational as `p` (denominator 1) or `p/q`.
inline std::string format_rational(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses `p` or `p/q`. Rejects empty parts, a zero denominator and any
/// character outside an optional leading sign plus digits.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& part) -> Int {
    if (part.empty()) throw ParseError(0, "empty integer in rational: '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ParseError(0, "bare sign in rational: '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw ParseError(0, "bad character in rational: '" + text + "'");
    }
    return Int(part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError(0, "zero denominator in rational: '" + text + "'");
  return Rational(num, den);
}

}  // namespace sexpansion
