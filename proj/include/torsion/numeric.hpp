#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace torsion {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Parses "p" or "p/q"; throws torsion::Error on malformed input.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

// Converts to long long, throwing if the value does not fit.
long long to_int64(const Integer& value);

}  // namespace torsion
