#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace instanton {

using Int = boost::multiprecision::cpp_int;

// Exact rational numbers, always reduced, denominator > 0.  Expression
// templates are disabled so Rational behaves as a plain value type in
// generic code (determinants over a ring parameter, std::map values, ...).
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

namespace detail {
inline bool valid_int_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace detail

// Accepts "p", "-p" or "p/q" with integer p, q; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!detail::valid_int_literal(num_part))
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  Int num(num_part);
  if (slash == std::string::npos) return Rational(num);
  const std::string den_part = text.substr(slash + 1);
  if (!detail::valid_int_literal(den_part))
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  Int den(den_part);
  if (den == 0)
    throw std::invalid_argument("invalid rational literal (zero denominator): '" + text + "'");
  return Rational(num) / Rational(den);
}

// "p" when integral, else "p/q" with q > 0.
inline std::string format_rational(const Rational& q) {
  std::string out = rat_num(q).str();
  if (!is_integer(q)) out += "/" + rat_den(q).str();
  return out;
}

}  // namespace instanton
