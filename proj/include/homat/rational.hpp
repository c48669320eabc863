#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "homat/errors.hpp"

namespace homat {

// Exact rational scalars over arbitrary-precision integers. Values are
// kept in lowest terms with a positive denominator; arithmetic never
// rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  out = Integer(std::string(s));
  return true;
}

}  // namespace detail

// Strict parser for the "p/q" | "p" wire form. Signs are normalized onto
// the numerator and the value reduced to lowest terms.
inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  Integer num, den = 1;
  if (!detail::parse_integer(slash == std::string_view::npos ? s : s.substr(0, slash), num))
    throw SchemaError("invalid rational: '" + std::string(s) + "'");
  if (slash != std::string_view::npos) {
    if (!detail::parse_integer(s.substr(slash + 1), den))
      throw SchemaError("invalid rational: '" + std::string(s) + "'");
    if (den == 0) throw SchemaError("zero denominator in rational: '" + std::string(s) + "'");
  }
  return Rational(num) / Rational(den);
}

}  // namespace homat
