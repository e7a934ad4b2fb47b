#pragma once

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "instanton/adhm.hpp"
#include "instanton/filtration.hpp"
#include "instanton/json_io.hpp"
#include "instanton/moduli.hpp"
#include "instanton/report.hpp"
#include "instanton/torus.hpp"
#include "instanton/young.hpp"

namespace instanton {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace selftest_detail {

inline double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Small deterministic generator so the randomized criteria are reproducible.
struct Lcg {
  unsigned long long state;
  explicit Lcg(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 16;
  }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }
  Rational small_rat() {
    const long long den = range(1, 3);
    return rat(range(-4, 4), den);
  }
};

inline RatMatrix random_matrix(Lcg& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.small_rat();
  return m;
}

inline RatMatrix random_invertible(Lcg& rng, int n) {
  for (;;) {
    RatMatrix m = random_matrix(rng, n, n);
    if (m.det() != Rational(0)) return m;
  }
}

// A, B drawn as polynomials in one shared matrix commute pairwise; with J = 0
// all three quadratic equations hold.
inline AdhmDatum random_satisfying(Lcg& rng, int c, int r) {
  AdhmDatum x = AdhmDatum::zero(c, r);
  const RatMatrix n = random_matrix(rng, c, c);
  const RatMatrix n2 = n * n;
  const RatMatrix id = RatMatrix::identity(c);
  RatMatrix* slots[4] = {&x.A0, &x.A1, &x.B0, &x.B1};
  for (RatMatrix* slot : slots)
    *slot = id.scaled(rng.small_rat()) + n.scaled(rng.small_rat()) + n2.scaled(rng.small_rat());
  x.I0 = random_matrix(rng, c, r);
  x.I1 = random_matrix(rng, c, r);
  return x;
}

inline AdhmDatum random_violating(Lcg& rng, int c, int r) {
  for (;;) {
    AdhmDatum x = AdhmDatum::zero(c, r);
    RatMatrix* slots[8] = {&x.A0, &x.A1, &x.B0, &x.B1, &x.I0, &x.I1, &x.J0, &x.J1};
    for (RatMatrix* slot : slots) {
      const int rows = slot->rows(), cols = slot->cols();
      *slot = random_matrix(rng, rows, cols);
    }
    if (!check_equations(x).ok) return x;
  }
}

inline TorusElement random_torus(Lcg& rng, int r) {
  auto nonzero = [&rng] {
    for (;;) {
      const Rational v = rng.small_rat();
      if (v != Rational(0)) return v;
    }
  };
  std::vector<Rational> e;
  for (int i = 0; i < r; ++i) e.push_back(nonzero());
  return TorusElement{nonzero(), nonzero(), nonzero(), std::move(e)};
}

struct Verdicts {
  bool eq_ok = false;
  std::vector<int> violated;
  bool stable = false;
  int closure_dim = 0;
  WeakVerdict weak = WeakVerdict::indeterminate;
  bool operator==(const Verdicts&) const = default;
};

inline Verdicts verdicts_of(const AdhmDatum& x) {
  const EquationsVerdict eq = check_equations(x);
  const StabilityReport st = stability_closure(x);
  const WeakStabilityReport wk = weak_stability(x);
  return {eq.ok, eq.violated, st.stable, st.closure_dim, wk.verdict};
}

inline std::vector<std::string> corpus_files() {
  return {"adhm_zero_c1_r2.json",    "adhm_violating_c1_r1.json", "adhm_young_2.json",
          "adhm_young_111.json",     "adhm_young_21.json",        "adhm_gauged_young_2.json",
          "adhm_nonfixed_c2_r1.json"};
}

inline AdhmDatum load_adhm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return adhm_from_json(parse_json_text(buf.str()));
}

inline MPoly variable_power(int var, int exp) {
  MPoly p = MPoly::constant(Rational(1));
  for (int i = 0; i < exp; ++i) p = p * MPoly::var(var);
  return p;
}

inline CriterionResult make_result(int number, const std::string& name, bool pass,
                                   const std::string& detail) {
  return {number, name, pass, detail};
}

// --- individual criteria -----------------------------------------------

inline CriterionResult criterion_hilbert_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  long long checks = 0, mismatches = 0;
  for (int c = 1; c <= 12; ++c)
    for (const Partition& nu : partitions_of(c)) {
      int wmax = 0;
      for (const auto& b : boxes(nu)) wmax = std::max(wmax, b.weight());
      const UniPoly chi = hilbert_poly_closed(nu);
      for (int m = wmax; m <= 30; ++m) {
        ++checks;
        if (Rational(hilbert_fn_oracle(nu, m)) != chi.eval(Rational(m))) ++mismatches;
      }
    }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << checks << " checks, " << mismatches << " mismatches, " << elapsed << "s";
  return make_result(1, "hilbert function agreement", mismatches == 0 && elapsed < 5.0,
                     detail.str());
}

inline CriterionResult criterion_resolution_additivity() {
  long long checks = 0, mismatches = 0;
  for (int c = 1; c <= 12; ++c)
    for (const Partition& nu : partitions_of(c)) {
      ++checks;
      if (!(resolution_structure_chi(resolution(nu)) == hilbert_poly_closed(nu))) ++mismatches;
    }
  std::ostringstream detail;
  detail << checks << " polynomial identities, " << mismatches << " mismatches";
  return make_result(2, "resolution additivity", mismatches == 0, detail.str());
}

inline CriterionResult criterion_catalogued_examples() {
  std::vector<std::string> problems;

  if (partition_to_ideal(Partition({3, 3, 2})).str() != "<z2^3, z2^2*z3^2, z3^3>")
    problems.push_back("ideal of (3,3,2)");

  const FreeResolution r431 = resolution(Partition({4, 3, 1}));
  if (r431.inner_weights != std::vector<int>{3, 3, 4, 4} ||
      r431.outer_weights != std::vector<int>{4, 5, 5})
    problems.push_back("resolution of (4,3,1)");

  const FreeResolution r2 = resolution(Partition({2}));
  if (r2.inner_weights != std::vector<int>{1, 2} || r2.outer_weights != std::vector<int>{3})
    problems.push_back("resolution of (2)");

  for (int c = 1; c <= 12; ++c) {
    const std::vector<int> inner = c == 1 ? std::vector<int>{1, 1} : std::vector<int>{1, c};
    for (const Partition& nu : {Partition(std::vector<int>{c}),
                                Partition(std::vector<int>(static_cast<std::size_t>(c), 1))}) {
      const FreeResolution res = resolution(nu);
      if (res.inner_weights != inner || res.outer_weights != std::vector<int>{c + 1}) {
        problems.push_back("primitive resolution at charge " + std::to_string(c));
        break;
      }
    }
  }

  std::string detail = problems.empty() ? "all catalogued examples match" : "failed:";
  for (const auto& p : problems) detail += " " + p;
  return make_result(3, "catalogued examples", problems.empty(), detail);
}

inline CriterionResult criterion_quotient_lengths() {
  std::vector<std::string> problems;
  if (quotient_length(Partition({2})) != Int(3)) problems.push_back("length of (2)");
  for (int c = 1; c <= 12; ++c) {
    const Partition col(std::vector<int>(static_cast<std::size_t>(c), 1));
    if (quotient_length(col) != Int(static_cast<long long>(c) * (c + 1) / 2))
      problems.push_back("column length at charge " + std::to_string(c));
  }
  // The length is the constant gap between the quotient's linear polynomial
  // cm + 2c and the curve polynomial.
  for (int c = 1; c <= 12; ++c)
    for (const Partition& nu : partitions_of(c)) {
      const UniPoly quotient({Rational(2 * c), Rational(c)});
      const UniPoly gap = quotient - hilbert_poly_closed(nu);
      if (!(gap == UniPoly::constant(Rational(quotient_length(nu))))) {
        problems.push_back("length bookkeeping for (" + nu.str() + ")");
      }
    }
  std::string detail = problems.empty() ? "lengths match the bookkeeping" : "failed:";
  for (const auto& p : problems) detail += " " + p;
  return make_result(4, "quotient lengths", problems.empty(), detail);
}

inline CriterionResult criterion_scheme_dimension() {
  long long checks = 0, mismatches = 0;
  if (hilbert_scheme_dim(Partition({1})) != Int(4)) ++mismatches;
  ++checks;
  for (int c = 1; c <= 3; ++c)
    for (const Partition& nu : partitions_of(c)) {
      ++checks;
      if (hom_degree0_dim(nu) != hilbert_scheme_dim(nu)) ++mismatches;
    }
  std::ostringstream detail;
  detail << checks << " dimension checks, " << mismatches << " mismatches";
  return make_result(5, "scheme dimension oracle", mismatches == 0, detail.str());
}

inline CriterionResult criterion_monad_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  Lcg rng(20240817ULL);
  long long disagreements = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    const int c = static_cast<int>(rng.range(1, 3));
    const int r = static_cast<int>(rng.range(1, 3));
    const AdhmDatum x =
        i % 2 == 0 ? random_satisfying(rng, c, r) : random_violating(rng, c, r);
    const bool eq = check_equations(x).ok;
    const bool complex = complex_condition(build_monad(x));
    if (eq != complex) ++disagreements;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << trials << " data (balanced), " << disagreements << " disagreements, " << elapsed
         << "s";
  return make_result(6, "monad equivalence", disagreements == 0 && elapsed < 10.0, detail.str());
}

inline CriterionResult criterion_equivariance() {
  Lcg rng(715ULL);
  std::vector<AdhmDatum> data;
  data.push_back(AdhmDatum::zero(2, 2));
  data.push_back(young_model_datum(Partition({2})));
  data.push_back(young_model_datum(Partition({2, 1})));
  data.push_back(random_satisfying(rng, 2, 1));
  data.push_back(random_violating(rng, 1, 1));

  long long violations = 0;
  for (const AdhmDatum& x : data) {
    const Verdicts base = verdicts_of(x);
    for (int i = 0; i < 100; ++i) {
      const GaugeElement g(random_invertible(rng, x.c));
      if (!(verdicts_of(apply_gauge(x, g)) == base)) ++violations;
    }
    for (int i = 0; i < 100; ++i) {
      const TorusElement tau = random_torus(rng, x.r);
      if (!(verdicts_of(act(x, tau)) == base)) ++violations;
    }
  }
  std::ostringstream detail;
  detail << data.size() << " data x 200 transformations, " << violations << " verdict changes";
  return make_result(7, "equivariance of verdicts", violations == 0, detail.str());
}

inline CriterionResult criterion_fixed_point_necessities(const std::string& data_dir) {
  std::vector<std::string> problems;
  int fixed_count = 0, scanned = 0;
  for (const std::string& file : corpus_files()) {
    AdhmDatum x = load_adhm(data_dir + "/" + file);
    ++scanned;
    const FixednessScan scan = scan_torus_fixedness(x);
    if (!scan.fixed) continue;
    ++fixed_count;
    if (!x.J0.is_zero() || !x.J1.is_zero()) problems.push_back(file + ": J nonzero");
    const FixedCandidateVerdict cand = is_fixed_candidate(x);
    if (!cand.ok) problems.push_back(file + ": candidate screen failed");
    if (!pencil_nilpotent(x.A0, x.A1) || !pencil_nilpotent(x.B0, x.B1))
      problems.push_back(file + ": pencil not nilpotent");
    const auto dets = singular_pencil_dets(x);
    if (!(dets.first == variable_power(2, x.c)) || !(dets.second == variable_power(3, x.c)))
      problems.push_back(file + ": pencil determinants");
  }
  if (fixed_count != 5) problems.push_back("expected exactly five fixed data in the corpus");
  std::ostringstream detail;
  detail << scanned << " corpus data, " << fixed_count << " fixed";
  for (const auto& p : problems) detail << "; " << p;
  return make_result(8, "fixed-point necessities", problems.empty(), detail.str());
}

inline CriterionResult criterion_middle_sheaf_polynomial() {
  long long mismatches = 0;
  for (int c = 0; c <= 10; ++c) {
    const UniPoly expected({Rational(2 - 2 * c), rat(11, 3) - Rational(c), Rational(2), rat(1, 3)});
    const UniPoly p = hilbert_poly_E(c, 2);
    if (!(p == expected)) ++mismatches;
    if (p.eval(Rational(-1)) != Rational(-c)) ++mismatches;
  }
  std::ostringstream detail;
  detail << "charges 0..10, " << mismatches << " mismatches";
  return make_result(9, "middle sheaf polynomial", mismatches == 0, detail.str());
}

inline CriterionResult criterion_filtration_cases() {
  using Levels = std::vector<LineSheafClass>;
  struct Expect {
    const char* name;
    std::vector<Levels> cases;
  };
  const std::vector<Expect> expectations = {
      {"1", {{{1, 0}}}},
      {"2", {{{1, 1}, {0, 0}}}},
      {"1,1", {{{1, 1}, {0, 0}}}},
      {"3", {{{1, 0}, {1, 1}, {0, 0}}, {{2, 0}, {1, 0}, {0, 0}}}},
      {"1,1,1", {{{1, 0}, {1, 1}, {0, 0}}, {{2, 0}, {1, 0}, {0, 0}}}},
      {"2,1", {{{1, 3}, {0, 0}, {-1, 0}}, {{2, 0}, {1, 0}, {0, 0}}, {{2, 1}, {0, 1}, {-1, 0}}}},
  };
  std::vector<std::string> problems;
  for (const auto& exp : expectations) {
    const SolverResult r = solve(Partition::parse(exp.name));
    std::vector<Levels> got;
    for (const auto& fc : r.cases) got.push_back(fc.levels);
    if (got != exp.cases) problems.push_back(std::string("cases for (") + exp.name + ")");
  }

  const auto table = case_table_c3_nonprimitive();
  const long long expected_rows[3][4] = {{1, -3, 4, 3}, {2, -2, 3, 2}, {3, -1, 2, 1}};
  for (const auto& row : expected_rows) {
    const auto& got = table[static_cast<std::size_t>(row[0])];
    if (!got.feasible || got.chi_q2 != row[1] || got.z_bar != row[2] || got.chi_rest != row[3])
      problems.push_back("table row " + std::to_string(row[0]));
  }
  for (int z : {0, 4, 5})
    if (table[static_cast<std::size_t>(z)].feasible)
      problems.push_back("slice " + std::to_string(z) + " should be infeasible");

  std::string detail = problems.empty() ? "case counts 1,1,1,2,2,3 and table reproduced" : "failed:";
  for (const auto& p : problems) detail += " " + p;
  return make_result(10, "filtration case counts", problems.empty(), detail);
}

inline CriterionResult criterion_riemann_roch() {
  long long checks = 0, failures = 0;
  const auto genus_zero = [&](const std::vector<LineSheafClass>& levels) {
    ++checks;
    long long chi0 = 0;
    for (const auto& s : levels) chi0 += s.chi(0);
    const GeneralizedClass gc = generalized_rank_degree(levels);
    const Rational genus = derive_genus(Rational(chi0), gc);
    if (genus != Rational(0) || !riemann_roch_check(Rational(chi0), gc, genus)) ++failures;
  };

  for (int c = 1; c <= 12; ++c) {
    genus_zero(gr_structure_sheaf(Partition(std::vector<int>{c})));
    genus_zero(gr_structure_sheaf(Partition(std::vector<int>(static_cast<std::size_t>(c), 1))));
  }
  genus_zero(gr_structure_sheaf(Partition({2, 1})));
  for (const char* name : {"1", "2", "1,1", "3", "1,1,1", "2,1", "4", "5"})
    for (const auto& fc : solve(Partition::parse(name)).cases) genus_zero(fc.levels);

  std::ostringstream detail;
  detail << checks << " classes, " << failures << " failures";
  return make_result(11, "generalized Riemann-Roch", failures == 0, detail.str());
}

inline CriterionResult criterion_component_counts() {
  std::vector<std::string> problems;
  for (int c = 0; c <= 50; ++c)
    if (!partition_count(c).agree()) {
      problems.push_back("methods disagree at charge " + std::to_string(c));
      break;
    }
  if (partition_count(2).enumerative != Int(2)) problems.push_back("p(2)");
  if (partition_count(3).enumerative != Int(3)) problems.push_back("p(3)");
  if (refined_component_count_c3() != 7) problems.push_back("refined count");
  if (component_lower_bound(2).bound != Int(2)) problems.push_back("lower bound at charge 2");
  std::string detail = problems.empty() ? "counts and bounds match" : "failed:";
  for (const auto& p : problems) detail += " " + p;
  return make_result(12, "component counts", problems.empty(), detail);
}

inline CriterionResult criterion_betti_numbers() {
  const IntPoly p = poincare_poly_c1();
  bool coeffs_ok = p.degree() == 13;
  for (int i = 0; i <= 13; ++i)
    coeffs_ok = coeffs_ok && p.coeff(i) == Int((i == 1 || i == 12) ? 0 : 1);
  const bool euler_ok = p.eval(Int(-1)) == 0;
  const auto quot = exact_quotient(p, IntPoly({Int(1), Int(0), Int(0), Int(1)}));
  const bool divides = quot.has_value();
  std::ostringstream detail;
  detail << "coefficients " << (coeffs_ok ? "ok" : "wrong") << ", euler "
         << (euler_ok ? "0" : "nonzero") << ", odd factor " << (divides ? "divides" : "missing");
  return make_result(13, "charge-one Betti numbers", coeffs_ok && euler_ok && divides,
                     detail.str());
}

inline CriterionResult criterion_euler_pairings() {
  const ChowClass o = ch_twist(0);
  const ChowClass q = ch_line_sheaf(1);
  const Rational qq = euler_pairing(q, q);
  const Rational iq = euler_pairing(o - q, q);
  const bool pass = qq == Rational(4) && iq == Rational(2);
  std::ostringstream detail;
  detail << "chi(Q,Q) = " << format_rational(qq) << " (expected 4), chi(I,Q) = "
         << format_rational(iq) << " (expected 2)";
  return make_result(14, "Euler pairings", pass, detail.str());
}

inline CriterionResult criterion_determinism() {
  const std::string a = report_to_json(classify(3)).dump(2);
  const std::string b = report_to_json(classify(3)).dump(2);
  const std::string one_thread = report_to_json(classify(4, 1)).dump(2);
  const std::string four_threads = report_to_json(classify(4, 4)).dump(2);
  const bool rerun_ok = a == b;
  const bool thread_ok = one_thread == four_threads;
  std::ostringstream detail;
  detail << "rerun " << (rerun_ok ? "identical" : "differs") << ", 1 vs 4 threads "
         << (thread_ok ? "identical" : "differs");
  return make_result(15, "deterministic reports", rerun_ok && thread_ok, detail.str());
}

}  // namespace selftest_detail

inline CriterionResult run_criterion(int number, const std::string& data_dir) {
  using namespace selftest_detail;
  switch (number) {
    case 1: return criterion_hilbert_agreement();
    case 2: return criterion_resolution_additivity();
    case 3: return criterion_catalogued_examples();
    case 4: return criterion_quotient_lengths();
    case 5: return criterion_scheme_dimension();
    case 6: return criterion_monad_equivalence();
    case 7: return criterion_equivariance();
    case 8: return criterion_fixed_point_necessities(data_dir);
    case 9: return criterion_middle_sheaf_polynomial();
    case 10: return criterion_filtration_cases();
    case 11: return criterion_riemann_roch();
    case 12: return criterion_component_counts();
    case 13: return criterion_betti_numbers();
    case 14: return criterion_euler_pairings();
    case 15: return criterion_determinism();
    default: throw std::invalid_argument("criterion number out of range (1..15)");
  }
}

inline std::vector<CriterionResult> run_all_criteria(const std::string& data_dir) {
  std::vector<CriterionResult> results;
  for (int n = 1; n <= 15; ++n) results.push_back(run_criterion(n, data_dir));
  return results;
}

}  // namespace instanton
