#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace singrr {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den. A zero denominator is an error; the sign is moved to the numerator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(BigInt(-num), BigInt(-den));
  return Rational(num, den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.str(); }

/// Parses "p", "p/q" or "-p/q" (decimal integers, q != 0). Throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw std::invalid_argument("not a rational literal: '" + text + "'");
    for (std::size_t k = start; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("not a rational literal: '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace singrr
