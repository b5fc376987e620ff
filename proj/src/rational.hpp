#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace indturan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Non-authoritative, for display only.
double to_double(const Rational& q);

/// base^exponent for a non-negative integer exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace indturan
