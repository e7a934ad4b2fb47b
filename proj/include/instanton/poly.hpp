#pragma once

#include <string>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

// Dense univariate polynomial over the rationals, coefficients ascending.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static UniPoly constant(const Rational& v) { return UniPoly(std::vector<Rational>{v}); }
  // a + b x
  static UniPoly linear(const Rational& a, const Rational& b) {
    return UniPoly(std::vector<Rational>{a, b});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly scaled(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  std::string str(const std::string& var = "m") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[i];
      if (a == 0) continue;
      if (!out.empty()) out += (a > 0) ? " + " : " - ";
      else if (a < 0) out += "-";
      const Rational mag = (a < 0) ? Rational(-a) : a;
      const bool unit = (mag == 1) && i > 0;
      if (!unit) out += format_rational(mag);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// chi(O_P3(m+k)) = (m+k+1)(m+k+2)(m+k+3)/6 as a polynomial in m.
inline UniPoly twisted_euler_cubic(long long k) {
  UniPoly p = UniPoly::constant(Rational(1, 6));
  for (long long j = 1; j <= 3; ++j) p = p * UniPoly::linear(Rational(k + j), Rational(1));
  return p;
}

}  // namespace instanton
