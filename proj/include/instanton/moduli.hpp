#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "instanton/filtration.hpp"
#include "instanton/poly.hpp"
#include "instanton/rational.hpp"
#include "instanton/young.hpp"

namespace instanton {

namespace detail {

// Partitions of n into parts of size at most k, by memoized recursion.
inline Int count_partitions_capped(int n, int k, std::map<std::pair<int, int>, Int>& memo) {
  if (n == 0) return Int(1);
  if (n < 0 || k == 0) return Int(0);
  const auto key = std::make_pair(n, k);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const Int value = count_partitions_capped(n - k, k, memo) +
                    count_partitions_capped(n, k - 1, memo);
  memo.emplace(key, value);
  return value;
}

}  // namespace detail

// Two independent partition counts: a direct recursive enumeration and the
// coefficient of x^c in the product of geometric series 1/(1-x^k), truncated
// at degree c (factors with k > c cannot reach that coefficient).
struct PartitionCountPair {
  Int enumerative;
  Int generating_function;
  bool agree() const { return enumerative == generating_function; }
};

inline PartitionCountPair partition_count(int c) {
  if (c < 0) throw std::invalid_argument("partition count needs a nonnegative charge");
  std::map<std::pair<int, int>, Int> memo;
  const Int direct = detail::count_partitions_capped(c, c, memo);

  std::vector<Int> series(static_cast<std::size_t>(c) + 1, Int(0));
  series[0] = 1;
  for (int k = 1; k <= c; ++k) {
    // Multiply by 1/(1-x^k) = 1 + x^k + x^{2k} + ... in place.
    for (int n = k; n <= c; ++n)
      series[static_cast<std::size_t>(n)] += series[static_cast<std::size_t>(n - k)];
  }
  return {direct, series[static_cast<std::size_t>(c)]};
}

// The fixed locus splits into closed strata indexed by partitions, so the
// partition count bounds the number of irreducible components from below.
struct ComponentBound {
  Int bound;
  std::vector<Partition> strata;
};

inline ComponentBound component_lower_bound(int c) {
  if (c < 1) throw std::invalid_argument("component bound needs a positive charge");
  const PartitionCountPair pair = partition_count(c);
  if (!pair.agree()) throw std::logic_error("partition counts disagree");
  ComponentBound out;
  out.bound = pair.enumerative;
  out.strata = partitions_of(c);
  if (Int(static_cast<long long>(out.strata.size())) != out.bound)
    throw std::logic_error("stratum list disagrees with the partition count");
  return out;
}

// Refinement at charge three: each admissible filtration case of each support
// contributes a component (the row and column supports are counted apart).
inline int refined_component_count_c3() {
  int total = 0;
  for (const char* name : {"3", "1,1,1", "2,1"})
    total += static_cast<int>(solve(Partition::parse(name)).cases.size());
  return total;
}

// Chow ring of P^3 truncated at H^4 = 0, with rational coefficients
// (r, c1, c2, c3) of 1, H, H^2, H^3.
struct ChowClass {
  Rational r, c1, c2, c3;

  ChowClass operator+(const ChowClass& o) const { return {r + o.r, c1 + o.c1, c2 + o.c2, c3 + o.c3}; }
  ChowClass operator-(const ChowClass& o) const { return {r - o.r, c1 - o.c1, c2 - o.c2, c3 - o.c3}; }
  ChowClass operator*(const ChowClass& o) const {
    return {r * o.r,
            r * o.c1 + c1 * o.r,
            r * o.c2 + c1 * o.c1 + c2 * o.r,
            r * o.c3 + c1 * o.c2 + c2 * o.c1 + c3 * o.r};
  }
  ChowClass scaled(const Rational& s) const { return {r * s, c1 * s, c2 * s, c3 * s}; }
  // Dual negates the odd-degree components.
  ChowClass dual() const { return {r, -c1, c2, -c3}; }
  bool operator==(const ChowClass&) const = default;
};

inline ChowClass todd_p3() { return {Rational(1), Rational(2), Rational(11, 6), Rational(1)}; }

// Chern character of O(m).
inline ChowClass ch_twist(long long m) {
  const Rational q(m);
  return {Rational(1), q, q * q / 2, q * q * q / 6};
}

// Euler characteristic of a class: the degree-three coefficient of E . td.
inline Rational chi_class(const ChowClass& e) { return (e * todd_p3()).c3; }

// Chern character of a degree-d line sheaf on the fixed line, pushed forward:
// supported in degrees two and three, with the H^3 coefficient solved from
// the contract chi(E(m)) = m + d + 1.
inline ChowClass ch_line_sheaf(long long d) {
  const ChowClass line{Rational(0), Rational(0), Rational(1), Rational(0)};
  const ChowClass point{Rational(0), Rational(0), Rational(0), Rational(1)};
  const Rational base = chi_class(line * ch_twist(0));
  const Rational slope = chi_class(point * ch_twist(0));
  if (slope == Rational(0)) throw std::logic_error("point class pairs to zero");
  const Rational u = (Rational(d + 1) - base) / slope;
  return line + point.scaled(u);
}

// chi(E, F) = integral of ch(E)^dual . ch(F) . td(P^3).
inline Rational euler_pairing(const ChowClass& e, const ChowClass& f) {
  return chi_class(e.dual() * f);
}

// Polynomial with exact integer coefficients in a formal variable t.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  static IntPoly monomial(int degree, Int v = Int(1)) {
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
    c.back() = std::move(v);
    return IntPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& t) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPoly(std::move(c));
  }
  IntPoly operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
  }
  bool operator==(const IntPoly&) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;  // ascending
};

// Exact polynomial division; empty when the remainder is nonzero or the
// divisor's leading coefficient does not divide evenly along the way.
inline std::optional<IntPoly> exact_quotient(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<Int> rem(num.coeffs());
  const int dn = den.degree();
  const Int lead = den.coeff(dn);
  if (num.degree() < dn) return num.is_zero() ? std::optional<IntPoly>(IntPoly()) : std::nullopt;
  std::vector<Int> q(static_cast<std::size_t>(num.degree() - dn) + 1, Int(0));
  for (int i = num.degree() - dn; i >= 0; --i) {
    const Int top = rem[static_cast<std::size_t>(i + dn)];
    if (top % lead != 0) return std::nullopt;
    const Int f = top / lead;
    q[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(i + j)] -= f * den.coeff(j);
  }
  for (const Int& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

// Betti numbers of the charge-one moduli space: the product of the even-degree
// palindrome of projective five-space with the odd factor 1 + t^3.
inline IntPoly poincare_poly_c1() {
  std::vector<Int> even(11, Int(0));
  for (int i = 0; i <= 10; i += 2) even[static_cast<std::size_t>(i)] = 1;
  return IntPoly(std::move(even)) * IntPoly({Int(1), Int(0), Int(0), Int(1)});
}

// A factor of 1 + t^3 forces the topological Euler characteristic to vanish.
inline bool euler_char_vanishing(const IntPoly& p) { return p.eval(Int(-1)) == 0; }

}  // namespace instanton
