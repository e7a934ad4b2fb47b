#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "instanton/moduli.hpp"

using namespace instanton;

TEST_CASE("partition counts by two independent methods") {
  const long long known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int c = 0; c <= 10; ++c) {
    const auto pair = partition_count(c);
    CHECK(pair.enumerative == Int(known[c]));
    CHECK(pair.agree());
  }
  for (int c = 11; c <= 50; ++c) REQUIRE(partition_count(c).agree());
  CHECK(partition_count(20).enumerative == Int(627));
  CHECK(partition_count(50).enumerative == Int(204226));
  CHECK_THROWS_AS(partition_count(-1), std::invalid_argument);

  // Third cross-check: the explicit partition lists.
  for (int c = 1; c <= 12; ++c)
    REQUIRE(partition_count(c).enumerative == Int(static_cast<long long>(partitions_of(c).size())));
}

TEST_CASE("component lower bound lists its strata") {
  const auto b1 = component_lower_bound(1);
  CHECK(b1.bound == 1);
  REQUIRE(b1.strata.size() == 1);
  CHECK(b1.strata[0].parts() == std::vector<int>{1});

  CHECK(component_lower_bound(2).bound == 2);
  const auto b3 = component_lower_bound(3);
  CHECK(b3.bound == 3);
  CHECK(b3.strata == partitions_of(3));

  CHECK_THROWS_AS(component_lower_bound(0), std::invalid_argument);
}

TEST_CASE("refined component count at charge three") {
  CHECK(refined_component_count_c3() == 7);
  CHECK(Int(refined_component_count_c3()) >= partition_count(3).enumerative);
  // Every charge-three support shape contributes at least one case.
  for (const char* name : {"3", "1,1,1", "2,1"})
    CHECK(solve(Partition::parse(name)).cases.size() >= 1);
}

TEST_CASE("truncated intersection ring of projective three-space") {
  const ChowClass one{Rational(1), Rational(0), Rational(0), Rational(0)};
  const ChowClass h{Rational(0), Rational(1), Rational(0), Rational(0)};
  const ChowClass h2 = h * h;
  CHECK(h2 == ChowClass{Rational(0), Rational(0), Rational(1), Rational(0)});
  const ChowClass h3 = h2 * h;
  CHECK(h3 == ChowClass{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(h3 * h == ChowClass{Rational(0), Rational(0), Rational(0), Rational(0)});
  CHECK(one * h == h);

  CHECK((h + h2).dual() == ChowClass{Rational(0), Rational(-1), Rational(1), Rational(0)});
  CHECK(h.scaled(Rational(3, 2)).c1 == Rational(3, 2));

  CHECK(todd_p3() == ChowClass{Rational(1), Rational(2), Rational(11, 6), Rational(1)});

  // chi(O(m)) through the ring equals the cubic binomial.
  for (long long m = -5; m <= 5; ++m)
    REQUIRE(chi_class(ch_twist(m)) == twisted_euler_cubic(0).eval(Rational(m)));
  CHECK(chi_class(ch_twist(0)) == Rational(1));
  CHECK(chi_class(ch_twist(-1)) == Rational(0));

  // ch is multiplicative over twists.
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b) REQUIRE(ch_twist(a) * ch_twist(b) == ch_twist(a + b));
}

TEST_CASE("line sheaf character satisfies its defining contract") {
  for (long long d = -3; d <= 3; ++d) {
    const ChowClass q = ch_line_sheaf(d);
    CHECK(q.r == Rational(0));
    CHECK(q.c1 == Rational(0));
    CHECK(q.c2 == Rational(1));
    CHECK(q.c3 == Rational(d - 1));
    for (long long m = -3; m <= 3; ++m)
      REQUIRE(chi_class(q * ch_twist(m)) == Rational(m + d + 1));
  }
  CHECK(chi_class(ch_line_sheaf(1) * ch_twist(0)) == Rational(2));
  CHECK(chi_class(ch_line_sheaf(0) * ch_twist(-1)) == Rational(0));
}

TEST_CASE("Euler pairings of the charge-one classes") {
  const ChowClass o = ch_twist(0);
  CHECK(euler_pairing(o, o) == Rational(1));

  const ChowClass q = ch_line_sheaf(1);
  const ChowClass ideal = o - q;
  CHECK(euler_pairing(ideal, q) == Rational(2));

  // A class concentrated in degrees two and three multiplies its own dual to
  // zero in the truncated ring, so the self-pairing vanishes.
  CHECK(euler_pairing(q, q) == Rational(0));
  CHECK(q.dual() * q == ChowClass{Rational(0), Rational(0), Rational(0), Rational(0)});

  // Biadditivity in both slots.
  const ChowClass e1 = ch_twist(2), e2 = ch_line_sheaf(-1), f1 = ch_twist(-2), f2 = ch_line_sheaf(3);
  CHECK(euler_pairing(e1 + e2, f1) == euler_pairing(e1, f1) + euler_pairing(e2, f1));
  CHECK(euler_pairing(e1, f1 + f2) == euler_pairing(e1, f1) + euler_pairing(e1, f2));

  // Twist pairings reduce to a single twisted Euler characteristic.
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b)
      REQUIRE(euler_pairing(ch_twist(a), ch_twist(b)) ==
              twisted_euler_cubic(0).eval(Rational(b - a)));

  // The symmetrized pairing only sees the even components.
  const std::vector<ChowClass> sample = {o, q, e1, e2, f2, ideal};
  for (const auto& e : sample)
    for (const auto& f : sample) {
      const Rational sym = euler_pairing(e, f) + euler_pairing(f, e);
      REQUIRE(sym == euler_pairing(e.dual(), f.dual()) + euler_pairing(f.dual(), e.dual()));
    }
}

TEST_CASE("integer polynomial arithmetic") {
  const IntPoly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());

  const IntPoly p({Int(1), Int(2)});          // 1 + 2t
  const IntPoly q({Int(0), Int(0), Int(3)});  // 3t^2
  CHECK((p + q).coeff(2) == 3);
  CHECK((p * q).degree() == 3);
  CHECK((p * q).coeff(2) == 3);
  CHECK((p * q).coeff(3) == 6);
  CHECK(p.eval(Int(5)) == 11);
  CHECK(IntPoly({Int(1), Int(-1)}) * IntPoly({Int(1), Int(1)}) == IntPoly({Int(1), Int(0), Int(-1)}));
  CHECK(IntPoly({Int(7), Int(0)}) == IntPoly::constant(Int(7)));
  CHECK(IntPoly::monomial(3) == IntPoly({Int(0), Int(0), Int(0), Int(1)}));

  const IntPoly cubic({Int(1), Int(0), Int(0), Int(1)});  // 1 + t^3
  const auto quot = exact_quotient(p * cubic, cubic);
  REQUIRE(quot.has_value());
  CHECK(*quot == p);
  CHECK_FALSE(exact_quotient(IntPoly({Int(1), Int(1)}), cubic).has_value());
  CHECK_FALSE(exact_quotient(IntPoly({Int(0), Int(0), Int(0), Int(1)}), cubic).has_value());
  const auto zq = exact_quotient(zero, cubic);
  REQUIRE(zq.has_value());
  CHECK(zq->is_zero());
  CHECK_THROWS_AS(exact_quotient(p, zero), std::invalid_argument);
}

TEST_CASE("charge-one Betti numbers") {
  const IntPoly p = poincare_poly_c1();
  CHECK(p.degree() == 13);
  for (int i = 0; i <= 13; ++i) {
    const Int expected = (i == 1 || i == 12) ? 0 : 1;
    REQUIRE(p.coeff(i) == expected);
  }
  CHECK(p.eval(Int(-1)) == 0);
  CHECK(euler_char_vanishing(p));

  const IntPoly cubic({Int(1), Int(0), Int(0), Int(1)});
  CHECK(euler_char_vanishing(cubic));
  CHECK_FALSE(euler_char_vanishing(IntPoly({Int(1), Int(0), Int(1)})));

  // The odd factor divides out exactly, leaving the even palindrome.
  const auto quot = exact_quotient(p, cubic);
  REQUIRE(quot.has_value());
  CHECK(quot->degree() == 10);
  for (int i = 0; i <= 10; ++i) REQUIRE(quot->coeff(i) == (i % 2 == 0 ? 1 : 0));
}
