#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "instanton/adhm.hpp"

using namespace instanton;

namespace {

Rational random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 5);
  return rat(num(rng), den(rng));
}

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_rat(rng);
  return m;
}

RatMatrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    RatMatrix g = random_matrix(rng, n, n);
    if (g.invertible()) return g;
  }
}

// A, B drawn as polynomials in one matrix commute pairwise, so with J = 0 all
// three quadratic constraints hold.
AdhmDatum random_satisfying(std::mt19937_64& rng, int c, int r, bool gauged) {
  const RatMatrix n = random_matrix(rng, c, c);
  auto poly_in_n = [&]() {
    return RatMatrix::identity(c).scaled(random_rat(rng)) + n.scaled(random_rat(rng)) +
           (n * n).scaled(random_rat(rng));
  };
  AdhmDatum x = AdhmDatum::zero(c, r);
  x.A0 = poly_in_n();
  x.A1 = poly_in_n();
  x.B0 = poly_in_n();
  x.B1 = poly_in_n();
  x.I0 = random_matrix(rng, c, r);
  x.I1 = random_matrix(rng, c, r);
  if (gauged) x = apply_gauge(x, GaugeElement(random_invertible(rng, c)));
  return x;
}

AdhmDatum random_violating(std::mt19937_64& rng, int c, int r) {
  for (;;) {
    AdhmDatum x = AdhmDatum::zero(c, r);
    x.A0 = random_matrix(rng, c, c);
    x.A1 = random_matrix(rng, c, c);
    x.B0 = random_matrix(rng, c, c);
    x.B1 = random_matrix(rng, c, c);
    x.I0 = random_matrix(rng, c, r);
    x.I1 = random_matrix(rng, c, r);
    x.J0 = random_matrix(rng, r, c);
    x.J1 = random_matrix(rng, r, c);
    if (!check_equations(x).ok) return x;
  }
}

}  // namespace

TEST_CASE("datum dimensions and zero datum") {
  const AdhmDatum z = AdhmDatum::zero(2, 3);
  CHECK(z.dimensions_ok());
  CHECK(check_equations(z).ok);

  AdhmDatum bad = z;
  bad.I0 = RatMatrix::zero(3, 2);  // transposed shape
  const auto errs = bad.dimension_errors();
  REQUIRE(errs.size() == 1);
  CHECK(errs[0] == "I0: expected 2x3, got 3x2");
  CHECK_FALSE(AdhmDatum::zero(0, 1).dimensions_ok());
}

TEST_CASE("equation check flags each failing constraint") {
  AdhmDatum x = AdhmDatum::zero(1, 1);
  x.I0 = RatMatrix{{1}};
  x.J0 = RatMatrix{{1}};
  const auto v = check_equations(x);
  CHECK_FALSE(v.ok);
  CHECK(v.violated == std::vector<int>{1});
  CHECK(v.residual1 == RatMatrix{{1}});
  CHECK(v.residual2.is_zero());
  CHECK(v.residual3.is_zero());

  AdhmDatum y = AdhmDatum::zero(1, 1);
  y.I1 = RatMatrix{{2}};
  y.J1 = RatMatrix{{3}};
  CHECK(check_equations(y).violated == std::vector<int>{2});

  AdhmDatum w = AdhmDatum::zero(1, 1);
  w.I0 = RatMatrix{{1}};
  w.J1 = RatMatrix{{5}};
  CHECK(check_equations(w).violated == std::vector<int>{3});

  // Mixed-term cancellation: I0 J1 + I1 J0 = 0 keeps constraint 3.
  AdhmDatum m = AdhmDatum::zero(1, 1);
  m.I0 = RatMatrix{{1}};
  m.J1 = RatMatrix{{4}};
  m.I1 = RatMatrix{{-2}};
  m.J0 = RatMatrix{{2}};
  CHECK(check_equations(m).violated == std::vector<int>{1, 2});
}

TEST_CASE("gauge action") {
  CHECK_THROWS_AS(GaugeElement(RatMatrix{{1, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GaugeElement(RatMatrix(2, 3)), std::invalid_argument);

  std::mt19937_64 rng(5);
  AdhmDatum x = random_violating(rng, 2, 1);

  // Scalar gauge: conjugation is trivial, framing maps scale oppositely.
  const GaugeElement two(RatMatrix::identity(2).scaled(Rational(2)));
  const AdhmDatum y = apply_gauge(x, two);
  CHECK(y.A0 == x.A0);
  CHECK(y.B1 == x.B1);
  CHECK(y.I0 == x.I0.scaled(Rational(2)));
  CHECK(y.J0 == x.J0.scaled(rat(1, 2)));

  // Group action: (gh) . x = g . (h . x), identity acts trivially.
  const RatMatrix g = random_invertible(rng, 2), h = random_invertible(rng, 2);
  CHECK(apply_gauge(apply_gauge(x, GaugeElement(h)), GaugeElement(g)) ==
        apply_gauge(x, GaugeElement(g * h)));
  CHECK(apply_gauge(x, GaugeElement::identity(2)) == x);

  // Equations are gauge-invariant.
  AdhmDatum s = random_satisfying(rng, 3, 2, false);
  CHECK(check_equations(apply_gauge(s, GaugeElement(random_invertible(rng, 3)))).ok);
}

TEST_CASE("monad shape and zero-datum entries") {
  const AdhmDatum z = AdhmDatum::zero(1, 2);
  const MonadPair m = build_monad(z);
  CHECK(m.alpha.rows == 4);
  CHECK(m.alpha.cols == 1);
  CHECK(m.beta.rows == 1);
  CHECK(m.beta.cols == 4);

  // alpha = (z2, z3, 0, 0)^T, beta = (-z3, z2, 0, 0).
  CHECK(m.alpha.at(0, 0) == MPoly::var(2));
  CHECK(m.alpha.at(1, 0) == MPoly::var(3));
  CHECK(m.alpha.at(2, 0).is_zero());
  CHECK(m.beta.at(0, 0) == MPoly::var(3, Rational(-1)));
  CHECK(m.beta.at(0, 1) == MPoly::var(2));
  CHECK(complex_condition(m));
}

TEST_CASE("monad entries carry the datum") {
  AdhmDatum x = AdhmDatum::zero(1, 1);
  x.A0 = RatMatrix{{2}};
  x.A1 = RatMatrix{{3}};
  x.B0 = RatMatrix{{5}};
  x.B1 = RatMatrix{{7}};
  x.I0 = RatMatrix{{11}};
  x.I1 = RatMatrix{{13}};
  x.J0 = RatMatrix{{17}};
  x.J1 = RatMatrix{{19}};
  const MonadPair m = build_monad(x);
  const std::array<Rational, 4> z = {Rational(1), Rational(10), Rational(100), Rational(1000)};
  const RatMatrix a = m.alpha.eval(z);
  CHECK(a(0, 0) == Rational(2 + 30 + 100));        // A0 z0 + A1 z1 + z2
  CHECK(a(1, 0) == Rational(5 + 70 + 1000));       // B0 z0 + B1 z1 + z3
  CHECK(a(2, 0) == Rational(17 + 190));            // J0 z0 + J1 z1
  const RatMatrix b = m.beta.eval(z);
  CHECK(b(0, 0) == Rational(-5 - 70 - 1000));
  CHECK(b(0, 1) == Rational(2 + 30 + 100));
  CHECK(b(0, 2) == Rational(11 + 130));            // I0 z0 + I1 z1
}

TEST_CASE("equations hold iff the monad is a complex") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick_c(1, 3), pick_r(1, 2), coin(0, 1);
  int satisfied = 0, violated = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int c = pick_c(rng), r = pick_r(rng);
    AdhmDatum x;
    if (trial % 2 == 0) {
      x = random_satisfying(rng, c, r, coin(rng) == 1);
      ++satisfied;
    } else {
      x = random_violating(rng, c, r);
      ++violated;
    }
    const bool eqs = check_equations(x).ok;
    const bool complex = complex_condition(build_monad(x));
    REQUIRE(eqs == complex);
  }
  CHECK(satisfied == 500);
  CHECK(violated == 500);
}

TEST_CASE("beta*alpha residuals match the equation residuals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const AdhmDatum x = random_violating(rng, 2, 2);
    const auto v = check_equations(x);
    const MonadPair m = build_monad(x);
    const SymMatrix prod = m.beta * m.alpha;
    for (int i = 0; i < x.c; ++i)
      for (int j = 0; j < x.c; ++j) {
        CHECK(prod.at(i, j).coeff({2, 0, 0, 0}) == v.residual1(i, j));
        CHECK(prod.at(i, j).coeff({0, 2, 0, 0}) == v.residual2(i, j));
        CHECK(prod.at(i, j).coeff({1, 1, 0, 0}) == v.residual3(i, j));
        // No quadratic terms involving z2, z3 survive.
        CHECK(prod.at(i, j).coeff({1, 0, 1, 0}) == 0);
        CHECK(prod.at(i, j).coeff({0, 0, 1, 1}) == 0);
        CHECK(prod.at(i, j).coeff({0, 0, 2, 0}) == 0);
      }
  }
}

TEST_CASE("stability closure") {
  // Shift with framing at the bottom generates everything.
  AdhmDatum x = AdhmDatum::zero(2, 1);
  x.A0 = RatMatrix{{0, 0}, {1, 0}};
  x.I0 = RatMatrix{{1}, {0}};
  CHECK(stability_closure(x).stable);
  CHECK(stability_closure(x).closure_dim == 2);

  // Framing at the top of the shift stays in a line.
  AdhmDatum y = x;
  y.I0 = RatMatrix{{0}, {1}};
  CHECK_FALSE(stability_closure(y).stable);
  CHECK(stability_closure(y).closure_dim == 1);

  // Zero framing generates nothing.
  CHECK(stability_closure(AdhmDatum::zero(3, 1)).closure_dim == 0);

  // Stability is a gauge invariant.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    AdhmDatum d = AdhmDatum::zero(3, 1);
    d.A0 = random_matrix(rng, 3, 3);
    d.B1 = random_matrix(rng, 3, 3);
    d.I0 = random_matrix(rng, 3, 1);
    const auto before = stability_closure(d);
    const auto after = stability_closure(apply_gauge(d, GaugeElement(random_invertible(rng, 3))));
    CHECK(before.stable == after.stable);
    CHECK(before.closure_dim == after.closure_dim);
  }
}

TEST_CASE("weak stability trichotomy") {
  // c = 1 has no proper line.
  CHECK(weak_stability(AdhmDatum::zero(1, 1)).verdict == WeakVerdict::weakly_stable);

  // Zero datum, c = 2: every line is invariant and contains the zero image.
  const auto zero2 = weak_stability(AdhmDatum::zero(2, 1));
  CHECK(zero2.verdict == WeakVerdict::destabilized);
  REQUIRE(zero2.destabilizing_line.has_value());

  // Image spans an eigenline of diag(1, 2).
  AdhmDatum diag = AdhmDatum::zero(2, 1);
  diag.A0 = RatMatrix{{1, 0}, {0, 2}};
  diag.I0 = RatMatrix{{1}, {0}};
  const auto d = weak_stability(diag);
  CHECK(d.verdict == WeakVerdict::destabilized);
  REQUIRE(d.destabilizing_line.has_value());
  CHECK(diag.A0.apply(*d.destabilizing_line) == *d.destabilizing_line);

  // Image vector (1, 1) is moved off its line by diag(1, 2).
  AdhmDatum tilted = diag;
  tilted.I0 = RatMatrix{{1}, {1}};
  CHECK(weak_stability(tilted).verdict == WeakVerdict::weakly_stable);

  // Two-dimensional image leaves no room for a line.
  AdhmDatum wide = AdhmDatum::zero(2, 2);
  wide.I0 = RatMatrix::identity(2);
  CHECK(weak_stability(wide).verdict == WeakVerdict::weakly_stable);

  // Empty image, irrational eigenvalues only: no rational certificate.
  AdhmDatum comp = AdhmDatum::zero(2, 1);
  comp.A0 = RatMatrix{{0, 2}, {1, 0}};  // eigenvalues +-sqrt(2)
  CHECK(weak_stability(comp).verdict == WeakVerdict::indeterminate);

  // Empty image, split spectra, but no common eigenvector.
  AdhmDatum nocommon = AdhmDatum::zero(2, 1);
  nocommon.A0 = RatMatrix{{1, 0}, {0, 2}};
  nocommon.B0 = RatMatrix{{0, 0}, {1, 0}};  // only eigenline is e2
  nocommon.A1 = RatMatrix{{0, 1}, {0, 0}};  // only eigenline is e1
  CHECK(weak_stability(nocommon).verdict == WeakVerdict::weakly_stable);

  // Empty image with a rational common eigenvector.
  AdhmDatum common = AdhmDatum::zero(2, 1);
  common.A0 = RatMatrix{{1, 0}, {0, 2}};
  common.B0 = RatMatrix{{3, 0}, {0, 4}};
  const auto cviews = weak_stability(common);
  CHECK(cviews.verdict == WeakVerdict::destabilized);
}

TEST_CASE("Euler characteristic polynomial of the middle sheaf") {
  for (int c = 0; c <= 10; ++c) {
    const UniPoly p = hilbert_poly_E(c, 2);
    const UniPoly expected({Rational(2 - 2 * c), rat(11, 3) - c, Rational(2), rat(1, 3)});
    CHECK(p == expected);
  }
  for (int r = 1; r <= 4; ++r)
    for (int c = 0; c <= 6; ++c) CHECK(hilbert_poly_E(c, r).eval(Rational(-1)) == Rational(-c));
  CHECK_THROWS_AS(hilbert_poly_E(-1, 2), std::invalid_argument);
}

TEST_CASE("coordinate pencil determinants") {
  // Nilpotent shift: determinant collapses to the identity variable.
  AdhmDatum x = AdhmDatum::zero(2, 1);
  x.A0 = RatMatrix{{0, 0}, {1, 0}};
  const auto [da, db] = singular_pencil_dets(x);
  CHECK(da == MPoly::var(2) * MPoly::var(2));
  CHECK(db == MPoly::var(3) * MPoly::var(3));

  // Projector: one eigenvalue contributes a moving factor.
  AdhmDatum y = AdhmDatum::zero(2, 1);
  y.A0 = RatMatrix{{1, 0}, {0, 0}};
  const auto [dp, dq] = singular_pencil_dets(y);
  CHECK(dp == (MPoly::var(0) + MPoly::var(2)) * MPoly::var(2));
  CHECK(dq == MPoly::var(3) * MPoly::var(3));

  // Generic check against numeric evaluation.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    AdhmDatum d = AdhmDatum::zero(3, 1);
    d.A0 = random_matrix(rng, 3, 3);
    d.A1 = random_matrix(rng, 3, 3);
    const auto [fa, fb] = singular_pencil_dets(d);
    const std::array<Rational, 4> z = {rat(1, 2), Rational(-3), Rational(2), Rational(5)};
    const RatMatrix num =
        d.A0.scaled(z[0]) + d.A1.scaled(z[1]) + RatMatrix::identity(3).scaled(z[2]);
    CHECK(fa.eval(z) == num.det());
    CHECK(fb.eval(z) == z[3] * z[3] * z[3]);
  }
}
