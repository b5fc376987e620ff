#include "rational.hpp"

#include "error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace indturan {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    std::size_t i = (part.front() == '-' || part.front() == '+') ? 1 : 0;
    if (i == part.size()) fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < part.size(); ++j)
      if (part[j] < '0' || part[j] > '9') fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    return BigInt(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace indturan
