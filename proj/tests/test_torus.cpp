#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "instanton/torus.hpp"

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

AdhmDatum random_full(std::mt19937_64& rng, int c, int r) {
  AdhmDatum x = AdhmDatum::zero(c, r);
  x.A0 = random_matrix(rng, c, c);
  x.A1 = random_matrix(rng, c, c);
  x.B0 = random_matrix(rng, c, c);
  x.B1 = random_matrix(rng, c, c);
  x.I0 = random_matrix(rng, c, r);
  x.I1 = random_matrix(rng, c, r);
  x.J0 = random_matrix(rng, r, c);
  x.J1 = random_matrix(rng, r, c);
  return x;
}

AdhmDatum violating_c1() {
  AdhmDatum x = AdhmDatum::zero(1, 1);
  x.I0 = RatMatrix{{1}};
  x.J0 = RatMatrix{{1}};
  return x;
}

AdhmDatum nonfixed_c2() {
  AdhmDatum x = AdhmDatum::zero(2, 1);
  x.A0 = RatMatrix{{1, 0}, {0, 2}};
  x.I0 = RatMatrix{{1}, {1}};
  return x;
}

}  // namespace

TEST_CASE("torus elements") {
  CHECK_THROWS_AS(TorusElement(0, 1, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(TorusElement(1, 1, 1, {Rational(1), Rational(0)}), std::invalid_argument);

  const TorusElement a(2, 3, 5, {rat(1, 2)});
  const TorusElement b(7, rat(1, 3), 1, {Rational(4)});
  const TorusElement ab = a.compose(b);
  CHECK(ab.t1 == 14);
  CHECK(ab.t2 == 1);
  CHECK(ab.t3 == 5);
  CHECK(ab.e == std::vector<Rational>{Rational(2)});
  CHECK_THROWS_AS(a.compose(TorusElement::identity(2)), std::invalid_argument);
}

TEST_CASE("torus action on a datum") {
  std::mt19937_64 rng(2);
  const AdhmDatum x = random_full(rng, 2, 2);
  const TorusElement tau(3, 5, 7, {Rational(2), rat(1, 4)});
  const AdhmDatum y = act(x, tau);

  CHECK(y.A0 == x.A0.scaled(Rational(5)));
  CHECK(y.A1 == x.A1.scaled(rat(5, 3)));
  CHECK(y.B0 == x.B0.scaled(Rational(7)));
  CHECK(y.B1 == x.B1.scaled(rat(7, 3)));
  for (int i = 0; i < 2; ++i) {
    CHECK(y.I0(i, 0) == x.I0(i, 0) * rat(5, 2));
    CHECK(y.I0(i, 1) == x.I0(i, 1) * Rational(20));
    CHECK(y.I1(i, 0) == x.I1(i, 0) * rat(5, 6));
    CHECK(y.J0(0, i) == x.J0(0, i) * Rational(14));
    CHECK(y.J0(1, i) == x.J0(1, i) * rat(7, 4));
    CHECK(y.J1(0, i) == x.J1(0, i) * rat(14, 3));
  }

  // Group action, and identity acts trivially.
  const TorusElement sigma(rat(1, 2), 1, 3, {Rational(5), Rational(1)});
  CHECK(act(act(x, sigma), tau) == act(x, sigma.compose(tau)));
  CHECK(act(x, TorusElement::identity(2)) == x);
  CHECK_THROWS_AS(act(x, TorusElement::identity(3)), std::invalid_argument);

  // The action commutes with the gauge action.
  const GaugeElement g(RatMatrix{{1, 1}, {0, 1}});
  CHECK(act(apply_gauge(x, g), tau) == apply_gauge(act(x, tau), g));

  // The action preserves the equations.
  std::mt19937_64 rng2(9);
  for (int trial = 0; trial < 20; ++trial) {
    const AdhmDatum d = random_full(rng2, 2, 2);
    const auto before = check_equations(d).violated;
    const auto after = check_equations(act(d, tau)).violated;
    CHECK(before == after);
  }
}

TEST_CASE("gauge witness solves the intertwining system") {
  // Multiplication model of the length-two row: fixed along each axis.
  const AdhmDatum x = young_model_datum(Partition({2}));

  const TorusElement t2only(1, 2, 1, {Rational(1)});
  auto w = gauge_witness(x, t2only);
  REQUIRE(w.has_value());
  CHECK(apply_gauge(x, GaugeElement(w->g)) == act(x, t2only));

  const TorusElement mixed(3, 2, 5, {Rational(2)});
  auto wm = gauge_witness(x, mixed);
  REQUIRE(wm.has_value());
  CHECK(apply_gauge(x, GaugeElement(wm->g)) == act(x, mixed));

  // Identity always admits the identity witness.
  std::mt19937_64 rng(21);
  const AdhmDatum f = random_full(rng, 2, 2);
  auto wi = gauge_witness(f, TorusElement::identity(2));
  REQUIRE(wi.has_value());
  CHECK(apply_gauge(f, GaugeElement(wi->g)) == f);

  // The zero datum is fixed by everything.
  auto wz = gauge_witness(AdhmDatum::zero(2, 1), TorusElement(2, 3, 5, {Rational(7)}));
  REQUIRE(wz.has_value());

  // Nonzero I and J with opposite scalings admit no witness.
  CHECK_FALSE(gauge_witness(violating_c1(), TorusElement(1, 2, 1, {Rational(1)})).has_value());
  CHECK_FALSE(gauge_witness(violating_c1(), TorusElement(1, 2, 1, {Rational(3)})).has_value());

  // Conjugation cannot rescale a spectrum.
  CHECK_FALSE(gauge_witness(nonfixed_c2(), TorusElement(1, 2, 1, {Rational(1)})).has_value());
  CHECK(gauge_witness(nonfixed_c2(), TorusElement(2, 1, 1, {Rational(1)})).has_value());
}

TEST_CASE("witnesses found across random framing scalings") {
  // For a datum with only I nonzero the witness must track e exactly.
  AdhmDatum x = AdhmDatum::zero(1, 2);
  x.I0 = RatMatrix{{1, 0}};
  const TorusElement tau(1, 2, 1, {Rational(2), Rational(1)});
  auto w = gauge_witness(x, tau);
  REQUIRE(w.has_value());
  CHECK(w->g == RatMatrix{{1}});
  CHECK(apply_gauge(x, GaugeElement(w->g)) == act(x, tau));
}

TEST_CASE("pencil nilpotency") {
  const RatMatrix shift{{0, 0}, {1, 0}};
  const RatMatrix up{{0, 1}, {0, 0}};
  CHECK(pencil_nilpotent(shift, shift));
  CHECK(pencil_nilpotent(shift, RatMatrix::zero(2, 2)));
  CHECK_FALSE(pencil_nilpotent(shift, up));  // char poly x^2 - z0 z1
  CHECK_FALSE(pencil_nilpotent(RatMatrix::identity(2), RatMatrix::zero(2, 2)));
  CHECK_THROWS_AS(pencil_nilpotent(shift, RatMatrix::zero(3, 3)), std::invalid_argument);
}

TEST_CASE("fixed candidate screen") {
  CHECK(is_fixed_candidate(young_model_datum(Partition({2, 1}))).ok);
  CHECK(is_fixed_candidate(AdhmDatum::zero(3, 2)).ok);

  const auto bad_j = is_fixed_candidate(violating_c1());
  CHECK_FALSE(bad_j.ok);
  CHECK(bad_j.failures == std::vector<std::string>{"J nonzero"});

  const auto spectral = is_fixed_candidate(nonfixed_c2());
  CHECK_FALSE(spectral.ok);
  CHECK(spectral.failures == std::vector<std::string>{"A-pencil not nilpotent"});

  AdhmDatum nc = AdhmDatum::zero(2, 1);
  nc.A0 = RatMatrix{{0, 0}, {1, 0}};
  nc.B0 = RatMatrix{{0, 1}, {0, 0}};
  const auto comm = is_fixed_candidate(nc);
  CHECK_FALSE(comm.ok);
  CHECK(comm.failures == std::vector<std::string>{"[A0,B0] nonzero"});

  AdhmDatum mixed = AdhmDatum::zero(2, 1);
  mixed.A0 = RatMatrix{{0, 0}, {1, 0}};
  mixed.B1 = RatMatrix{{0, 1}, {0, 0}};
  const auto cross = is_fixed_candidate(mixed);
  CHECK_FALSE(cross.ok);
  CHECK(cross.failures == std::vector<std::string>{"[A0,B1]+[A1,B0] nonzero"});
}

TEST_CASE("sandwich vanishing") {
  CHECK(check_sandwich(young_model_datum(Partition({3, 1})), 6));
  CHECK_FALSE(check_sandwich(violating_c1(), 0));

  // J I = 0 but J A I != 0: fails first at length one.
  AdhmDatum x = AdhmDatum::zero(2, 1);
  x.A0 = RatMatrix{{0, 0}, {1, 0}};
  x.I0 = RatMatrix{{1}, {0}};
  x.J0 = RatMatrix{{0, 1}};
  CHECK(check_sandwich(x, 0));
  CHECK_FALSE(check_sandwich(x, 1));
  CHECK(check_sandwich(x, -1));
}

TEST_CASE("multiplication models from diagrams") {
  const AdhmDatum two = young_model_datum(Partition({2}));
  CHECK(two.c == 2);
  CHECK(two.r == 1);
  CHECK(two.A0 == RatMatrix{{0, 0}, {1, 0}});
  CHECK(two.B0.is_zero());
  CHECK(two.I0 == RatMatrix{{1}, {0}});
  CHECK(two.J0.is_zero());

  const AdhmDatum col3 = young_model_datum(Partition({1, 1, 1}));
  CHECK(col3.A0.is_zero());
  CHECK(col3.B0 == RatMatrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});

  const AdhmDatum hook = young_model_datum(Partition({2, 1}));
  CHECK(hook.A0 == RatMatrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  CHECK(hook.B0 == RatMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  CHECK(hook.I0 == RatMatrix{{1}, {0}, {0}});

  for (const auto& nu : partitions_of(4)) {
    const AdhmDatum x = young_model_datum(nu);
    CHECK(check_equations(x).ok);
    CHECK(stability_closure(x).stable);
    CHECK(is_fixed_candidate(x).ok);
    CHECK(check_sandwich(x, 2 * nu.weight()));
  }
}

TEST_CASE("fixedness scan over the corpus data") {
  const auto zero = scan_torus_fixedness(AdhmDatum::zero(1, 2));
  CHECK(zero.fixed);

  CHECK(scan_torus_fixedness(young_model_datum(Partition({2}))).fixed);
  CHECK(scan_torus_fixedness(young_model_datum(Partition({1, 1, 1}))).fixed);
  CHECK(scan_torus_fixedness(young_model_datum(Partition({2, 1}))).fixed);

  // Fixedness is a property of the gauge class.
  const GaugeElement g(RatMatrix{{1, 1}, {0, 1}});
  CHECK(scan_torus_fixedness(apply_gauge(young_model_datum(Partition({2})), g)).fixed);

  const auto viol = scan_torus_fixedness(violating_c1());
  CHECK_FALSE(viol.fixed);
  CHECK(viol.generator_fixed == std::array<bool, 3>{true, false, false});

  const auto spectral = scan_torus_fixedness(nonfixed_c2());
  CHECK_FALSE(spectral.fixed);
  CHECK(spectral.generator_fixed == std::array<bool, 3>{true, false, true});

  // Framing datum from the witness test is fixed outright.
  AdhmDatum framed = AdhmDatum::zero(1, 2);
  framed.I0 = RatMatrix{{1, 0}};
  CHECK(scan_torus_fixedness(framed).fixed);

  CHECK_THROWS_AS(scan_torus_fixedness(AdhmDatum::zero(1, 8)), std::invalid_argument);
}
