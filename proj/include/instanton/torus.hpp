#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "instanton/adhm.hpp"
#include "instanton/matrix.hpp"
#include "instanton/mpoly.hpp"
#include "instanton/rational.hpp"
#include "instanton/young.hpp"

namespace instanton {

// Element (t1, t2, t3) of the coordinate 3-torus together with a framing
// rotation diag(e_1, ..., e_r).
struct TorusElement {
  Rational t1, t2, t3;
  std::vector<Rational> e;

  TorusElement(Rational t1_, Rational t2_, Rational t3_, std::vector<Rational> e_)
      : t1(std::move(t1_)), t2(std::move(t2_)), t3(std::move(t3_)), e(std::move(e_)) {
    if (t1 == 0 || t2 == 0 || t3 == 0) throw std::invalid_argument("zero torus entry");
    for (const auto& v : e)
      if (v == 0) throw std::invalid_argument("zero torus entry");
  }

  static TorusElement identity(int r) {
    return TorusElement(1, 1, 1, std::vector<Rational>(r, Rational(1)));
  }

  // Componentwise product (the group law).
  TorusElement compose(const TorusElement& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("framing size mismatch");
    std::vector<Rational> ee(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ee[i] = e[i] * o.e[i];
    return TorusElement(t1 * o.t1, t2 * o.t2, t3 * o.t3, std::move(ee));
  }
};

// The lifted action on a datum:
//   A0 -> t2 A0          A1 -> t1^-1 t2 A1
//   B0 -> t3 B0          B1 -> t1^-1 t3 B1
//   I0 -> t2 I0 e^-1     I1 -> t1^-1 t2 I1 e^-1
//   J0 -> t3 e J0        J1 -> t1^-1 t3 e J1
inline AdhmDatum act(const AdhmDatum& x, const TorusElement& tau) {
  if (static_cast<int>(tau.e.size()) != x.r) throw std::invalid_argument("framing size mismatch");
  std::vector<Rational> einv(tau.e.size());
  for (std::size_t i = 0; i < tau.e.size(); ++i) einv[i] = Rational(1) / tau.e[i];
  const RatMatrix e_mat = RatMatrix::diagonal(tau.e);
  const RatMatrix einv_mat = RatMatrix::diagonal(einv);
  const Rational q1 = Rational(1) / tau.t1;

  AdhmDatum y = x;
  y.A0 = x.A0.scaled(tau.t2);
  y.A1 = x.A1.scaled(q1 * tau.t2);
  y.B0 = x.B0.scaled(tau.t3);
  y.B1 = x.B1.scaled(q1 * tau.t3);
  y.I0 = (x.I0 * einv_mat).scaled(tau.t2);
  y.I1 = (x.I1 * einv_mat).scaled(q1 * tau.t2);
  y.J0 = (e_mat * x.J0).scaled(tau.t3);
  y.J1 = (e_mat * x.J1).scaled(q1 * tau.t3);
  return y;
}

// Invertible g with act(X, tau) == apply_gauge(X, g).
struct GaugeWitness {
  RatMatrix g;
};

namespace detail {

// Searches the affine space {particular + sum l_i basis_i} for an invertible
// matrix: the particular point, then seeded random combinations, then (only
// if those fail) a symbolic determinant to either certify emptiness or point
// at a witness by exhaustive small-grid search.
inline std::optional<RatMatrix> invertible_in_affine_space(const RatMatrix& particular,
                                                           const std::vector<RatMatrix>& basis) {
  if (particular.invertible()) return particular;
  if (basis.empty()) return std::nullopt;
  const int n = particular.rows();
  const int k = static_cast<int>(basis.size());

  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next_small = [&state]() {  // deterministic values in [-5, 5]
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long long>((state >> 33) % 11) - 5;
  };
  for (int draw = 0; draw < 50; ++draw) {
    RatMatrix g = particular;
    for (const auto& b : basis) g = g + b.scaled(Rational(next_small()));
    if (g.invertible()) return g;
  }

  // det(particular + sum x_i basis_i) as a polynomial in x_1..x_k.
  std::vector<MPolyN> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MPolyN p = MPolyN::constant(k, particular(i, j));
      for (int v = 0; v < k; ++v)
        if (basis[static_cast<std::size_t>(v)](i, j) != 0)
          p = p + MPolyN::var(k, v, basis[static_cast<std::size_t>(v)](i, j));
      entries.push_back(std::move(p));
    }
  const MPolyN det = generic_det<MPolyN>(n, entries);
  if (det.is_zero()) return std::nullopt;

  // A nonzero polynomial of total degree <= n cannot vanish on a grid with
  // n+1 values per axis, so scanning sup-norm shells up to n/2+1 must hit a
  // nonzero point.
  const int max_shell = n / 2 + 1;
  std::vector<long long> pt(static_cast<std::size_t>(k), 0);
  for (int shell = 0; shell <= max_shell; ++shell) {
    // Odometer over [-shell, shell]^k, keeping only sup-norm == shell.
    std::vector<long long> v(static_cast<std::size_t>(k), -shell);
    while (true) {
      bool on_shell = shell == 0;
      for (const auto val : v) on_shell = on_shell || (val == shell || val == -shell);
      if (on_shell) {
        std::vector<Rational> x(v.begin(), v.end());
        if (det.eval(x) != 0) {
          RatMatrix g = particular;
          for (int i = 0; i < k; ++i)
            g = g + basis[static_cast<std::size_t>(i)].scaled(Rational(v[static_cast<std::size_t>(i)]));
          return g;
        }
      }
      int pos = 0;
      while (pos < k && v[static_cast<std::size_t>(pos)] == shell) {
        v[static_cast<std::size_t>(pos)] = -shell;
        ++pos;
      }
      if (pos == k) break;
      ++v[static_cast<std::size_t>(pos)];
    }
  }
  throw std::logic_error("nonzero determinant not found on certified grid");
}

}  // namespace detail

// Solves the intertwining system
//   g A0 = t2 A0 g            g A1 = t1^-1 t2 A1 g
//   g B0 = t3 B0 g            g B1 = t1^-1 t3 B1 g
//   g I0 = t2 I0 e^-1         g I1 = t1^-1 t2 I1 e^-1
//   t3 e J0 g = J0            t1^-1 t3 e J1 g = J1
// for g and picks an invertible element of the solution space when one
// exists.
inline std::optional<GaugeWitness> gauge_witness(const AdhmDatum& x, const TorusElement& tau) {
  if (static_cast<int>(tau.e.size()) != x.r) throw std::invalid_argument("framing size mismatch");
  const int c = x.c, r = x.r;
  const int unknowns = c * c;
  const int rows = 4 * c * c + 4 * c * r;
  RatMatrix m(rows, unknowns);
  std::vector<Rational> rhs(static_cast<std::size_t>(rows), Rational(0));
  const auto idx = [c](int i, int j) { return i * c + j; };
  int row = 0;

  const Rational q1 = Rational(1) / tau.t1;
  const std::array<std::pair<const RatMatrix*, Rational>, 4> conj = {
      std::make_pair(&x.A0, tau.t2), std::make_pair(&x.A1, q1 * tau.t2),
      std::make_pair(&x.B0, tau.t3), std::make_pair(&x.B1, q1 * tau.t3)};
  for (const auto& [op, s] : conj) {
    // (g M - s M g)(i, j) = 0
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j, ++row)
        for (int k = 0; k < c; ++k) {
          m(row, idx(i, k)) += (*op)(k, j);
          m(row, idx(k, j)) -= s * (*op)(i, k);
        }
  }
  const std::array<std::pair<const RatMatrix*, Rational>, 2> framed_in = {
      std::make_pair(&x.I0, tau.t2), std::make_pair(&x.I1, q1 * tau.t2)};
  for (const auto& [op, s] : framed_in) {
    // (g M)(i, j) = s M(i, j) / e_j
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < r; ++j, ++row) {
        for (int k = 0; k < c; ++k) m(row, idx(i, k)) += (*op)(k, j);
        rhs[static_cast<std::size_t>(row)] = s * (*op)(i, j) / tau.e[static_cast<std::size_t>(j)];
      }
  }
  const std::array<std::pair<const RatMatrix*, Rational>, 2> framed_out = {
      std::make_pair(&x.J0, tau.t3), std::make_pair(&x.J1, q1 * tau.t3)};
  for (const auto& [op, s] : framed_out) {
    // s e_i (M g)(i, j) = M(i, j)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j, ++row) {
        for (int k = 0; k < c; ++k)
          m(row, idx(k, j)) += s * tau.e[static_cast<std::size_t>(i)] * (*op)(i, k);
        rhs[static_cast<std::size_t>(row)] = (*op)(i, j);
      }
  }

  const auto particular = m.solve(rhs);
  if (!particular) return std::nullopt;
  const auto null_basis = m.kernel();

  RatMatrix p0(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) p0(i, j) = (*particular)[static_cast<std::size_t>(idx(i, j))];
  std::vector<RatMatrix> basis;
  basis.reserve(null_basis.size());
  for (const auto& v : null_basis) {
    RatMatrix b(c, c);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) b(i, j) = v[static_cast<std::size_t>(idx(i, j))];
    basis.push_back(std::move(b));
  }
  auto g = detail::invertible_in_affine_space(p0, basis);
  if (!g) return std::nullopt;
  return GaugeWitness{std::move(*g)};
}

// True iff the pencil M0 z0 + M1 z1 has characteristic polynomial x^c
// identically in z0, z1.
inline bool pencil_nilpotent(const RatMatrix& m0, const RatMatrix& m1) {
  if (!m0.is_square() || m0.rows() != m1.rows() || m0.cols() != m1.cols())
    throw std::invalid_argument("pencil size mismatch");
  const auto cp = char_poly_poly_entries(pencil(m0, m1));
  for (std::size_t i = 0; i + 1 < cp.size(); ++i)
    if (!cp[i].is_zero()) return false;
  return true;
}

// Necessary conditions satisfied by every datum whose class is fixed:
// vanishing J, commuting reduced equations, and nilpotent coordinate pencils.
struct FixedCandidateVerdict {
  bool ok = false;
  std::vector<std::string> failures;
};

inline FixedCandidateVerdict is_fixed_candidate(const AdhmDatum& x) {
  FixedCandidateVerdict v;
  if (!x.J0.is_zero() || !x.J1.is_zero()) v.failures.push_back("J nonzero");
  if (!commutator(x.A0, x.B0).is_zero()) v.failures.push_back("[A0,B0] nonzero");
  if (!commutator(x.A1, x.B1).is_zero()) v.failures.push_back("[A1,B1] nonzero");
  if (!(commutator(x.A0, x.B1) + commutator(x.A1, x.B0)).is_zero())
    v.failures.push_back("[A0,B1]+[A1,B0] nonzero");
  if (!pencil_nilpotent(x.A0, x.A1)) v.failures.push_back("A-pencil not nilpotent");
  if (!pencil_nilpotent(x.B0, x.B1)) v.failures.push_back("B-pencil not nilpotent");
  v.ok = v.failures.empty();
  return v;
}

// J_a A_b^l B_c^m I_d = 0 for all index choices and all l + m <= L.
inline bool check_sandwich(const AdhmDatum& x, int L) {
  if (L < 0) return true;
  const RatMatrix* js[2] = {&x.J0, &x.J1};
  const RatMatrix* as[2] = {&x.A0, &x.A1};
  const RatMatrix* bs[2] = {&x.B0, &x.B1};
  const RatMatrix* is[2] = {&x.I0, &x.I1};
  // powers[op][p] = op^p
  auto powers = [&](const RatMatrix& mtx) {
    std::vector<RatMatrix> p{RatMatrix::identity(x.c)};
    for (int q = 1; q <= L; ++q) p.push_back(p.back() * mtx);
    return p;
  };
  const std::vector<RatMatrix> apow[2] = {powers(*as[0]), powers(*as[1])};
  const std::vector<RatMatrix> bpow[2] = {powers(*bs[0]), powers(*bs[1])};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int cc = 0; cc < 2; ++cc)
        for (int d = 0; d < 2; ++d)
          for (int l = 0; l <= L; ++l)
            for (int mm = 0; l + mm <= L; ++mm)
              if (!(*js[a] * apow[b][static_cast<std::size_t>(l)] *
                    bpow[cc][static_cast<std::size_t>(mm)] * *is[d])
                       .is_zero())
                return false;
  return true;
}

// Certifies fixedness of the gauge class by witness search along the three
// one-parameter subgroups, sampling the parameter at rational points (the
// witness equations are polynomial in the parameter, and the sample count
// exceeds the relevant degrees).  The framing rotation is enumerated over
// monomial cocharacters e_j = t^{k_j} with |k_j| <= c + 1.
struct FixednessScan {
  bool fixed = false;
  std::array<bool, 3> generator_fixed{false, false, false};
  // Cocharacter exponents that worked, per generator (valid when fixed).
  std::array<std::vector<long long>, 3> framing_exponents;
};

inline FixednessScan scan_torus_fixedness(const AdhmDatum& x) {
  const int c = x.c, r = x.r;
  const long long range = 2LL * (c + 1) + 1;
  long long tuple_count = 1;
  for (int i = 0; i < r; ++i) {
    tuple_count *= range;
    if (tuple_count > 200000) throw std::invalid_argument("framing exponent enumeration too large");
  }
  const Rational samples[5] = {Rational(2), Rational(3), Rational(5), Rational(7), rat(1, 2)};

  auto pow_rat = [](const Rational& t, long long k) {
    Rational acc = 1;
    const Rational base = k >= 0 ? t : Rational(1) / t;
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) acc *= base;
    return acc;
  };

  FixednessScan scan;
  scan.fixed = true;
  for (int axis = 0; axis < 3; ++axis) {
    bool ok_axis = false;
    std::vector<long long> exps(static_cast<std::size_t>(r), -(c + 1));
    for (long long tuple = 0; tuple < tuple_count && !ok_axis; ++tuple) {
      bool all_samples = true;
      for (const Rational& t : samples) {
        std::vector<Rational> e(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) e[static_cast<std::size_t>(j)] = pow_rat(t, exps[static_cast<std::size_t>(j)]);
        const TorusElement tau(axis == 0 ? t : Rational(1), axis == 1 ? t : Rational(1),
                               axis == 2 ? t : Rational(1), std::move(e));
        if (!gauge_witness(x, tau)) {
          all_samples = false;
          break;
        }
      }
      if (all_samples) {
        ok_axis = true;
        scan.framing_exponents[static_cast<std::size_t>(axis)] = exps;
        break;
      }
      // Odometer step over [-(c+1), c+1]^r.
      int pos = 0;
      while (pos < r && exps[static_cast<std::size_t>(pos)] == c + 1) {
        exps[static_cast<std::size_t>(pos)] = -(c + 1);
        ++pos;
      }
      if (pos < r) ++exps[static_cast<std::size_t>(pos)];
    }
    scan.generator_fixed[static_cast<std::size_t>(axis)] = ok_axis;
    scan.fixed = scan.fixed && ok_axis;
  }
  return scan;
}

// Rank-one datum modelled on a diagram: the operators act on the cell basis
// as multiplication by z2 and z3, and the framing injects at the corner cell.
inline AdhmDatum young_model_datum(const Partition& nu) {
  const auto cells = boxes(nu);
  const int c = nu.weight();
  const auto index_of = [&cells](int a, int b) -> int {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].a == a && cells[i].b == b) return static_cast<int>(i);
    return -1;
  };
  AdhmDatum x = AdhmDatum::zero(c, 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int up = index_of(cells[i].a + 1, cells[i].b);
    if (up >= 0) x.A0(up, static_cast<int>(i)) = 1;
    const int right = index_of(cells[i].a, cells[i].b + 1);
    if (right >= 0) x.B0(right, static_cast<int>(i)) = 1;
  }
  x.I0(index_of(0, 0), 0) = 1;
  return x;
}

}  // namespace instanton
