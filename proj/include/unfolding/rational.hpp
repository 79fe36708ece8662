// Exact rational arithmetic used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unfolding {

using Int = boost::multiprecision::cpp_int;

// Always kept canonical: denominator > 0, gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("sign without digits");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  const Int magnitude{std::string(text)};
  return negative ? Int(-magnitude) : magnitude;
}

}  // namespace detail

// Accepts "p", "-p", "p/q" with q > 0. No whitespace.
inline Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int(text));
  const Int num = detail::parse_int(text.substr(0, slash));
  const Int den = detail::parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive: " + std::string(text));
  return Rational(num, den);
}

// Canonical "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace unfolding
