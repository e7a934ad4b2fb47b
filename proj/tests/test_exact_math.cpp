#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "instanton/matrix.hpp"
#include "instanton/mpoly.hpp"
#include "instanton/poly.hpp"
#include "instanton/rational.hpp"

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

}  // namespace

TEST_CASE("rational construction, reduction, parsing") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat_den(rat(3, -6)) == 2);
  CHECK(rat_num(rat(3, -6)) == -1);
  CHECK(is_integer(rat(8, 4)));
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);

  CHECK(parse_rational("7") == rat(7));
  CHECK(parse_rational("-7/3") == rat(-7, 3));
  CHECK(parse_rational("4/-6") == rat(-2, 3));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);

  CHECK(format_rational(rat(-1, 2)) == "-1/2");
  CHECK(format_rational(rat(5)) == "5");
  CHECK(parse_rational(format_rational(rat(-22, 7))) == rat(-22, 7));
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> a(-100, 100);
  std::uniform_int_distribution<long long> b(1, 100);
  for (int i = 0; i < 200; ++i) {
    const long long p = a(rng), q = b(rng), r = a(rng), s = b(rng);
    const Rational sum = rat(p, q) + rat(r, s);
    CHECK(sum * q * s == Rational(p * s + r * q));
  }
}

TEST_CASE("matrix rank") {
  CHECK(mat_rank(RatMatrix::identity(2)) == 2);
  CHECK(mat_rank(RatMatrix::zero(3, 3)) == 0);
  CHECK(mat_rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("matrix kernel") {
  CHECK(mat_kernel(RatMatrix::identity(3)).empty());
  CHECK(mat_kernel(RatMatrix::zero(2, 3)).size() == 3);

  const auto basis = mat_kernel(RatMatrix{{1, 1}});
  REQUIRE(basis.size() == 1);
  // Spans {(1, -1)}.
  CHECK(basis[0][0] != 0);
  CHECK(basis[0][0] == -basis[0][1]);
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    RatMatrix m = random_matrix(rng, rows, cols);
    if (trial % 3 == 0 && rows > 1) {  // force dependent rows sometimes
      for (int j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j);
    }
    const auto basis = m.kernel();
    CHECK(m.rank() + static_cast<int>(basis.size()) == cols);
    for (const auto& v : basis) {
      const auto image = m.apply(v);
      for (const auto& x : image) CHECK(x == 0);
    }
  }
}

TEST_CASE("determinant, inverse, solve") {
  const RatMatrix m{{1, 2}, {3, 4}};
  CHECK(m.det() == rat(-2));
  CHECK(RatMatrix({{1, 2}, {2, 4}}).det() == 0);
  CHECK_FALSE(RatMatrix({{1, 2}, {2, 4}}).inverse().has_value());

  const auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == RatMatrix::identity(2));

  const auto x = m.solve({rat(5), rat(11)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == std::vector<Rational>{rat(5), rat(11)});
  // Inconsistent system.
  CHECK_FALSE(RatMatrix({{1, 1}, {1, 1}}).solve({rat(0), rat(1)}).has_value());
}

TEST_CASE("subspace basis closure bookkeeping") {
  SubspaceBasis s(3);
  CHECK(s.insert({rat(1), rat(0), rat(0)}));
  CHECK_FALSE(s.insert({rat(2), rat(0), rat(0)}));
  CHECK(s.insert({rat(1), rat(1), rat(0)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({rat(3), rat(-5), rat(0)}));
  CHECK_FALSE(s.contains({rat(0), rat(0), rat(1)}));
}

TEST_CASE("univariate polynomials") {
  const UniPoly p({rat(1), rat(2), rat(1)});  // 1 + 2m + m^2
  CHECK(p.eval(rat(3)) == rat(16));
  CHECK(p == UniPoly::linear(rat(1), rat(1)) * UniPoly::linear(rat(1), rat(1)));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(UniPoly({rat(0), rat(0)}).degree() == -1);
  CHECK(p.str() == "m^2 + 2*m + 1");
}

TEST_CASE("twisted Euler cubic") {
  CHECK(twisted_euler_cubic(0).eval(rat(0)) == rat(1));
  CHECK(twisted_euler_cubic(-1).eval(rat(0)) == rat(0));
  CHECK(twisted_euler_cubic(1).eval(rat(0)) == rat(4));
  // chi(O(m)) at m = 2 counts the 10 quadric monomials.
  CHECK(twisted_euler_cubic(0).eval(rat(2)) == rat(10));
  // Shift consistency: cubic(k) at m equals cubic(0) at m + k.
  for (long long k = -3; k <= 3; ++k)
    for (long long m = -3; m <= 3; ++m)
      CHECK(twisted_euler_cubic(k).eval(rat(m)) == twisted_euler_cubic(0).eval(rat(m + k)));
}

TEST_CASE("symbolic characteristic polynomial") {
  SECTION("zero matrix") {
    const auto c = char_poly_poly_entries(SymMatrix(2, 2));
    REQUIRE(c.size() == 3);
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());
    CHECK(c[2] == MPoly::constant(rat(1)));
  }
  SECTION("diag(z0, z1)") {
    SymMatrix m(2, 2);
    m.at(0, 0) = MPoly::var(0);
    m.at(1, 1) = MPoly::var(1);
    const auto c = char_poly_poly_entries(m);
    CHECK(c[0] == MPoly::var(0) * MPoly::var(1));
    CHECK(c[1] == -(MPoly::var(0) + MPoly::var(1)));
    CHECK(c[2] == MPoly::constant(rat(1)));
  }
  SECTION("strictly triangular pencil") {
    SymMatrix m(2, 2);
    m.at(0, 1) = MPoly::var(0);
    const auto c = char_poly_poly_entries(m);
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());
  }
  SECTION("non-square input rejected") {
    CHECK_THROWS_AS(char_poly_poly_entries(SymMatrix(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("characteristic polynomial specializes correctly") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dim(1, 4);
  int substitutions = 0;
  while (substitutions < 120) {
    const int n = dim(rng);
    RatMatrix m0 = random_matrix(rng, n, n), m1 = random_matrix(rng, n, n);
    const auto sym = char_poly_poly_entries(pencil(m0, m1));
    const std::array<Rational, 4> z{random_rat(rng), random_rat(rng), rat(0), rat(0)};
    const RatMatrix numeric = m0.scaled(z[0]) + m1.scaled(z[1]);
    const auto num = char_poly_numeric(numeric);
    REQUIRE(sym.size() == num.size());
    for (std::size_t i = 0; i < num.size(); ++i) CHECK(sym[i].eval(z) == num[i]);
    ++substitutions;
  }
}

TEST_CASE("symbolic determinant agrees with elimination") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = dim(rng);
    RatMatrix m0 = random_matrix(rng, n, n), m1 = random_matrix(rng, n, n);
    const MPoly d = sym_det(pencil(m0, m1, 2));
    const std::array<Rational, 4> z{random_rat(rng), random_rat(rng), random_rat(rng), rat(0)};
    CHECK(d.eval(z) == (m0.scaled(z[0]) + m1.scaled(z[1]) + RatMatrix::identity(n).scaled(z[2])).det());
  }
}

TEST_CASE("multivariate polynomial basics") {
  const MPoly p = MPoly::var(0) * MPoly::var(1) + MPoly::constant(rat(3));
  CHECK(p.total_degree() == 2);
  CHECK(p.eval({rat(2), rat(5), rat(0), rat(0)}) == rat(13));
  CHECK((p - p).is_zero());
  CHECK(p.str() == "3 + z0*z1");

  MPolyN q = MPolyN::var(3, 0) * MPolyN::var(3, 2) - MPolyN::constant(3, rat(1));
  CHECK(q.eval({rat(3), rat(0), rat(2)}) == rat(5));
  CHECK((q - q).is_zero());
}
