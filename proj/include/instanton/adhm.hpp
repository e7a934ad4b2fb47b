#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "instanton/matrix.hpp"
#include "instanton/mpoly.hpp"
#include "instanton/poly.hpp"
#include "instanton/rational.hpp"

namespace instanton {

// Linear-algebra datum (A0, A1, B0, B1, I0, I1, J0, J1) on V = Q^c framed by
// W = Q^r.  Dimension checks are an explicit operation so that deliberately
// broken data can be round-tripped through negative tests.
struct AdhmDatum {
  int c = 0;
  int r = 0;
  RatMatrix A0, A1, B0, B1;  // End(V)
  RatMatrix I0, I1;          // Hom(W, V)
  RatMatrix J0, J1;          // Hom(V, W)

  static AdhmDatum zero(int c, int r) {
    AdhmDatum x;
    x.c = c;
    x.r = r;
    x.A0 = x.A1 = x.B0 = x.B1 = RatMatrix::zero(c, c);
    x.I0 = x.I1 = RatMatrix::zero(c, r);
    x.J0 = x.J1 = RatMatrix::zero(r, c);
    return x;
  }

  std::vector<std::string> dimension_errors() const {
    std::vector<std::string> errs;
    if (c < 1) errs.push_back("c must be at least 1");
    if (r < 1) errs.push_back("r must be at least 1");
    auto expect = [&errs](const RatMatrix& m, int rows, int cols, const char* name) {
      if (m.rows() != rows || m.cols() != cols)
        errs.push_back(std::string(name) + ": expected " + std::to_string(rows) + "x" +
                       std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()));
    };
    expect(A0, c, c, "A0");
    expect(A1, c, c, "A1");
    expect(B0, c, c, "B0");
    expect(B1, c, c, "B1");
    expect(I0, c, r, "I0");
    expect(I1, c, r, "I1");
    expect(J0, r, c, "J0");
    expect(J1, r, c, "J1");
    return errs;
  }
  bool dimensions_ok() const { return dimension_errors().empty(); }

  bool operator==(const AdhmDatum&) const = default;
};

// Verdict of the three quadratic constraints
//   [A0,B0] + I0*J0 = 0
//   [A1,B1] + I1*J1 = 0
//   [A0,B1] + [A1,B0] + I0*J1 + I1*J0 = 0
// (the third written so that it is exactly the mixed z0*z1 coefficient of
// beta*alpha for the monad below).
struct EquationsVerdict {
  bool ok = false;
  std::vector<int> violated;  // 1-based indices of failing equations
  RatMatrix residual1, residual2, residual3;
};

inline EquationsVerdict check_equations(const AdhmDatum& x) {
  EquationsVerdict v;
  v.residual1 = commutator(x.A0, x.B0) + x.I0 * x.J0;
  v.residual2 = commutator(x.A1, x.B1) + x.I1 * x.J1;
  v.residual3 = commutator(x.A0, x.B1) + commutator(x.A1, x.B0) + x.I0 * x.J1 + x.I1 * x.J0;
  if (!v.residual1.is_zero()) v.violated.push_back(1);
  if (!v.residual2.is_zero()) v.violated.push_back(2);
  if (!v.residual3.is_zero()) v.violated.push_back(3);
  v.ok = v.violated.empty();
  return v;
}

// Invertible change of basis of V; the inverse is computed once up front.
class GaugeElement {
 public:
  explicit GaugeElement(RatMatrix g) : g_(std::move(g)) {
    if (!g_.is_square()) throw std::invalid_argument("gauge element must be square");
    auto inv = g_.inverse();
    if (!inv) throw std::invalid_argument("gauge element is singular");
    inv_ = std::move(*inv);
  }
  static GaugeElement identity(int c) { return GaugeElement(RatMatrix::identity(c)); }

  const RatMatrix& mat() const { return g_; }
  const RatMatrix& inv() const { return inv_; }

 private:
  RatMatrix g_, inv_;
};

inline AdhmDatum apply_gauge(const AdhmDatum& x, const GaugeElement& g) {
  if (g.mat().rows() != x.c) throw std::invalid_argument("gauge element size mismatch");
  AdhmDatum y = x;
  y.A0 = g.mat() * x.A0 * g.inv();
  y.A1 = g.mat() * x.A1 * g.inv();
  y.B0 = g.mat() * x.B0 * g.inv();
  y.B1 = g.mat() * x.B1 * g.inv();
  y.I0 = g.mat() * x.I0;
  y.I1 = g.mat() * x.I1;
  y.J0 = x.J0 * g.inv();
  y.J1 = x.J1 * g.inv();
  return y;
}

// The two maps O(-1)^c -> O^{2c+r} -> O(1)^c of the display complex, with
// entries linear in z0..z3.
struct MonadPair {
  SymMatrix alpha;  // (2c+r) x c
  SymMatrix beta;   // c x (2c+r)
};

namespace detail {
inline void place_block(SymMatrix& dst, int row0, int col0, const RatMatrix& block, int var,
                        const Rational& scale = Rational(1)) {
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j)
      if (block(i, j) != 0)
        dst.at(row0 + i, col0 + j) = dst.at(row0 + i, col0 + j) + MPoly::var(var, block(i, j) * scale);
}
inline void place_identity(SymMatrix& dst, int row0, int col0, int n, int var,
                           const Rational& scale = Rational(1)) {
  for (int i = 0; i < n; ++i)
    dst.at(row0 + i, col0 + i) = dst.at(row0 + i, col0 + i) + MPoly::var(var, scale);
}
}  // namespace detail

inline MonadPair build_monad(const AdhmDatum& x) {
  const int c = x.c, r = x.r;
  MonadPair m;
  m.alpha = SymMatrix(2 * c + r, c);
  detail::place_block(m.alpha, 0, 0, x.A0, 0);
  detail::place_block(m.alpha, 0, 0, x.A1, 1);
  detail::place_identity(m.alpha, 0, 0, c, 2);
  detail::place_block(m.alpha, c, 0, x.B0, 0);
  detail::place_block(m.alpha, c, 0, x.B1, 1);
  detail::place_identity(m.alpha, c, 0, c, 3);
  detail::place_block(m.alpha, 2 * c, 0, x.J0, 0);
  detail::place_block(m.alpha, 2 * c, 0, x.J1, 1);

  m.beta = SymMatrix(c, 2 * c + r);
  detail::place_block(m.beta, 0, 0, x.B0, 0, Rational(-1));
  detail::place_block(m.beta, 0, 0, x.B1, 1, Rational(-1));
  detail::place_identity(m.beta, 0, 0, c, 3, Rational(-1));
  detail::place_block(m.beta, 0, c, x.A0, 0);
  detail::place_block(m.beta, 0, c, x.A1, 1);
  detail::place_identity(m.beta, 0, c, c, 2);
  detail::place_block(m.beta, 0, 2 * c, x.I0, 0);
  detail::place_block(m.beta, 0, 2 * c, x.I1, 1);
  return m;
}

inline bool complex_condition(const MonadPair& m) { return (m.beta * m.alpha).is_zero(); }

// Smallest subspace of V containing Im I0 + Im I1 and invariant under all of
// A0, A1, B0, B1.
struct StabilityReport {
  bool stable = false;
  int closure_dim = 0;
};

inline StabilityReport stability_closure(const AdhmDatum& x) {
  SubspaceBasis span(x.c);
  std::vector<std::vector<Rational>> frontier;
  for (const RatMatrix* m : {&x.I0, &x.I1})
    for (int j = 0; j < m->cols(); ++j) {
      auto v = m->col(j);
      if (span.insert(v)) frontier.push_back(std::move(v));
    }
  const RatMatrix* ops[4] = {&x.A0, &x.A1, &x.B0, &x.B1};
  while (!frontier.empty()) {
    std::vector<std::vector<Rational>> next;
    for (const auto& v : frontier)
      for (const RatMatrix* op : ops) {
        auto w = op->apply(v);
        if (span.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {span.dim() == x.c, span.dim()};
}

namespace detail {

// All positive divisors of |n|, by trial division.
inline std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      low.push_back(d);
      if (d * d != n) high.push_back(n / d);
    }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Rational roots (with multiplicity removed by deflation) of a polynomial
// given by ascending rational coefficients.  Returns the distinct roots and
// whether the polynomial splits into linear factors over the rationals.
struct RationalRoots {
  std::vector<Rational> roots;
  bool splits = false;
};

inline RationalRoots rational_roots(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  RationalRoots out;
  if (coeffs.size() <= 1) {  // constant: vacuously split
    out.splits = true;
    return out;
  }
  // Clear denominators to integer coefficients.
  Int lcm = 1;
  for (const auto& q : coeffs) {
    const Int d = rat_den(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<Int> a(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = rat_num(coeffs[i] * lcm);

  bool root_zero = false;
  while (a.size() > 1 && a.front() == 0) {  // strip x factors
    root_zero = true;
    a.erase(a.begin());
  }
  if (root_zero) out.roots.push_back(Rational(0));

  while (a.size() > 1) {
    const auto ps = divisors(a.front());
    const auto qs = divisors(a.back());
    bool found = false;
    for (const Int& p : ps) {
      for (const Int& q : qs) {
        for (int sg : {1, -1}) {
          const Rational cand = Rational(sg * p) / Rational(q);
          Rational val = 0;
          for (auto it = a.rbegin(); it != a.rend(); ++it) val = val * cand + Rational(*it);
          if (val != 0) continue;
          if (std::find(out.roots.begin(), out.roots.end(), cand) == out.roots.end())
            out.roots.push_back(cand);
          // Synthetic division by (x - cand); result has rational
          // coefficients, so re-clear denominators.
          std::vector<Rational> quo(a.size() - 1);
          Rational carry = 0;
          for (std::size_t i = a.size(); i-- > 1;) {
            carry = Rational(a[i]) + carry * cand;
            quo[i - 1] = carry;
          }
          Int l2 = 1;
          for (const auto& qq : quo) {
            const Int d = rat_den(qq);
            l2 = l2 / boost::multiprecision::gcd(l2, d) * d;
          }
          a.resize(quo.size());
          for (std::size_t i = 0; i < quo.size(); ++i) a[i] = rat_num(quo[i] * l2);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.splits = (a.size() <= 1);
  return out;
}

}  // namespace detail

enum class WeakVerdict { weakly_stable, destabilized, indeterminate };

struct WeakStabilityReport {
  WeakVerdict verdict = WeakVerdict::indeterminate;
  // A spanning vector of an invariant line containing Im I0 + Im I1, when one
  // was found.
  std::optional<std::vector<Rational>> destabilizing_line;
};

namespace detail {
inline bool line_invariant(const AdhmDatum& x, const std::vector<Rational>& v) {
  RatMatrix probe(x.c, 5);
  for (int i = 0; i < x.c; ++i) probe(i, 0) = v[i];
  const RatMatrix* ops[4] = {&x.A0, &x.A1, &x.B0, &x.B1};
  for (int k = 0; k < 4; ++k) {
    const auto w = ops[k]->apply(v);
    for (int i = 0; i < x.c; ++i) probe(i, k + 1) = w[i];
  }
  return probe.rank() <= 1;
}
}  // namespace detail

// Searches for a one-dimensional subspace S of V with A(S), B(S) inside S and
// Im I0 + Im I1 inside S.  Linearity in the pencil parameter makes the
// per-point condition equivalent to invariance under each of the four
// operators separately.
inline WeakStabilityReport weak_stability(const AdhmDatum& x) {
  WeakStabilityReport rep;
  if (x.c == 1) {  // no proper one-dimensional subspace exists
    rep.verdict = WeakVerdict::weakly_stable;
    return rep;
  }
  SubspaceBasis image(x.c);
  for (const RatMatrix* m : {&x.I0, &x.I1})
    for (int j = 0; j < m->cols(); ++j) image.insert(m->col(j));

  if (image.dim() >= 2) {
    rep.verdict = WeakVerdict::weakly_stable;
    return rep;
  }
  if (image.dim() == 1) {
    const auto v = image.vectors().front();
    if (detail::line_invariant(x, v)) {
      rep.verdict = WeakVerdict::destabilized;
      rep.destabilizing_line = v;
    } else {
      rep.verdict = WeakVerdict::weakly_stable;
    }
    return rep;
  }

  // Empty image: any common eigenvector of the four operators spans a
  // destabilizing line.  A rational eigenvector forces rational eigenvalues,
  // so enumerating rational roots of the characteristic polynomials is a
  // complete search over the rationals; it is complete over any extension
  // field exactly when all four polynomials split.
  const RatMatrix* ops[4] = {&x.A0, &x.A1, &x.B0, &x.B1};
  bool all_split = true;
  std::vector<Rational> eigs[4];
  for (int k = 0; k < 4; ++k) {
    auto rr = detail::rational_roots(char_poly_numeric(*ops[k]));
    eigs[k] = std::move(rr.roots);
    all_split = all_split && rr.splits;
  }
  for (const auto& l0 : eigs[0])
    for (const auto& l1 : eigs[1])
      for (const auto& l2 : eigs[2])
        for (const auto& l3 : eigs[3]) {
          RatMatrix stacked(4 * x.c, x.c);
          const Rational ls[4] = {l0, l1, l2, l3};
          for (int k = 0; k < 4; ++k)
            for (int i = 0; i < x.c; ++i)
              for (int j = 0; j < x.c; ++j)
                stacked(k * x.c + i, j) = (*ops[k])(i, j) - (i == j ? ls[k] : Rational(0));
          const auto kern = stacked.kernel();
          if (!kern.empty()) {
            rep.verdict = WeakVerdict::destabilized;
            rep.destabilizing_line = kern.front();
            return rep;
          }
        }
  rep.verdict = all_split ? WeakVerdict::weakly_stable : WeakVerdict::indeterminate;
  return rep;
}

// Euler characteristic polynomial of the middle cohomology sheaf of the
// monad: (2c+r) chi(O(m)) - c chi(O(m-1)) - c chi(O(m+1)).
inline UniPoly hilbert_poly_E(int c, int r) {
  if (c < 0) throw std::invalid_argument("negative charge");
  return twisted_euler_cubic(0).scaled(Rational(2 * c + r)) -
         (twisted_euler_cubic(-1) + twisted_euler_cubic(1)).scaled(Rational(c));
}

// det(A0 z0 + A1 z1 + z2 Id) and det(B0 z0 + B1 z1 + z3 Id), expanded.
inline std::pair<MPoly, MPoly> singular_pencil_dets(const AdhmDatum& x) {
  return {sym_det(pencil(x.A0, x.A1, 2)), sym_det(pencil(x.B0, x.B1, 3))};
}

}  // namespace instanton
