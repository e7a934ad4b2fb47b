#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "instanton/rational.hpp"
#include "instanton/young.hpp"

namespace instanton {

// One graded level of the canonical filtration: a line bundle O(d) on the
// reduced line plus a torsion sheaf of length t.
struct LineSheafClass {
  int d = 0;
  int t = 0;
  long long chi(int m) const { return static_cast<long long>(d) + m + 1 + t; }
  auto operator<=>(const LineSheafClass&) const = default;
};

struct LineCohomology {
  long long h0 = 0, h1 = 0;
};

inline LineCohomology line_cohomology(const LineSheafClass& s, int m) {
  const long long e = static_cast<long long>(s.d) + m + 1;
  return {std::max(0LL, e) + s.t, std::max(0LL, -e)};
}

// Candidate filtration data on a monomial multiple line, outermost level
// first (the restriction to the reduced line), innermost level last.
struct FiltrationCase {
  Partition support;
  std::vector<LineSheafClass> levels;
  bool operator==(const FiltrationCase&) const = default;
};

// Degrees of the graded pieces of the structure sheaf, outermost first.
// Catalogued for the shapes whose filtrations are classified: a single row or
// column gives the staircase 0, -1, ..., -(c-1); the hook (2,1) gives
// 0, -1, -1.
inline std::vector<LineSheafClass> gr_structure_sheaf(const Partition& nu) {
  if (nu.empty()) throw std::invalid_argument("empty support");
  const int c = nu.weight();
  if (nu.is_primitive()) {
    std::vector<LineSheafClass> out;
    for (int i = 0; i < c; ++i) out.push_back({-i, 0});
    return out;
  }
  if (nu.parts() == std::vector<int>{2, 1}) return {{0, 0}, {-1, 0}, {-1, 0}};
  throw std::invalid_argument("no structure filtration catalogued for this support");
}

inline bool has_structure_filtration(const Partition& nu) {
  return nu.is_primitive() || nu.parts() == std::vector<int>{2, 1};
}

// Names of the admissibility constraints, in evaluation order.
inline const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names = {
      "level-count",        "chi-total",
      "torsion-nonneg",     "innermost-purity",
      "outermost-degree",   "innermost-h0",
      "partial-sum-chi",    "connecting",
      "cascade-c",          "support-degree",
      "double-curve-structure", "intermediate-h1",
      "quasi-locally-free", "restriction-compatibility",
      "mu-semistable"};
  return names;
}

struct ConditionReport {
  bool ok = false;
  std::string first_violated;   // empty when ok
  int violated_index = -1;      // position in condition_names(), -1 when ok
};

// Trailing partial sums are the subsheaves of the filtration (the innermost
// level is the deepest subobject).
namespace detail {
inline long long chi_trailing(const std::vector<LineSheafClass>& levels, std::size_t from, int m) {
  long long acc = 0;
  for (std::size_t j = from; j < levels.size(); ++j) acc += levels[j].chi(m);
  return acc;
}
}  // namespace detail

// Slope bound for every subsheaf: chi_T(0) <= 2 rank_T.
inline bool mu_semistable(const std::vector<LineSheafClass>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (detail::chi_trailing(levels, i, 0) > 2 * static_cast<long long>(levels.size() - i))
      return false;
  return true;
}

// Checks the named admissibility constraints in order and reports the first
// violation.  Shape-specific constraints are skipped outside their scope.
inline ConditionReport instanton_conditions(const FiltrationCase& fc) {
  if (fc.support.empty()) throw std::invalid_argument("empty support");
  const int c = fc.support.weight();
  const auto& lv = fc.levels;
  const int n = static_cast<int>(lv.size());
  const bool primitive = fc.support.is_primitive();
  const bool hook = fc.support.parts() == std::vector<int>{2, 1};

  const auto& names = condition_names();
  int step = -1;
  const auto fail = [&](int index) {
    return ConditionReport{false, names[static_cast<std::size_t>(index)], index};
  };

  ++step;  // level-count
  if (n != c) return fail(step);

  ++step;  // chi-total: chi_Q(0) = 2c
  if (detail::chi_trailing(lv, 0, 0) != 2LL * c) return fail(step);

  ++step;  // torsion-nonneg
  for (const auto& s : lv)
    if (s.t < 0) return fail(step);

  ++step;  // innermost-purity: the deepest level is torsion-free
  if (lv.back().t != 0) return fail(step);

  ++step;  // outermost-degree: positive twist on the reduced line
  if (lv.front().d < 1) return fail(step);

  ++step;  // innermost-h0: chi(-2) of the deepest line bundle stays <= 0
  if (lv.back().d > 1) return fail(step);

  ++step;  // partial-sum-chi: no subsheaf has sections after twisting by -2
  for (int i = 1; i < n; ++i)
    if (detail::chi_trailing(lv, static_cast<std::size_t>(i), -2) > 0) return fail(step);

  ++step;  // connecting: each middle level's h0(-2) fits into the next h1
  for (int i = 1; i + 1 < n; ++i) {
    const long long h0 = std::max(0LL, static_cast<long long>(lv[static_cast<std::size_t>(i)].d) - 1) +
                         lv[static_cast<std::size_t>(i)].t;
    if (h0 > -detail::chi_trailing(lv, static_cast<std::size_t>(i) + 1, -2)) return fail(step);
  }

  ++step;  // cascade-c: the outermost h0(-2) saturates the inner h1 exactly
  if (n >= 2) {
    const long long h0 = std::max(0LL, static_cast<long long>(lv.front().d) - 1) + lv.front().t;
    if (h0 != -detail::chi_trailing(lv, 1, -2)) return fail(step);
  }

  ++step;  // support-degree: levels dominate the structure-sheaf degrees
  if (primitive || hook) {
    const auto base = gr_structure_sheaf(fc.support);
    for (int i = 0; i < n; ++i)
      if (lv[static_cast<std::size_t>(i)].d < base[static_cast<std::size_t>(i)].d)
        return fail(step);
  }

  ++step;  // double-curve-structure: deepest degree drops by exactly one
  if ((primitive && n >= 2) || hook) {
    if (lv[static_cast<std::size_t>(n - 1)].d != lv[static_cast<std::size_t>(n - 2)].d - 1)
      return fail(step);
  }

  ++step;  // intermediate-h1: middle levels keep positive twist
  if (primitive) {
    for (int i = 1; i + 1 < n; ++i)
      if (lv[static_cast<std::size_t>(i)].d < 1) return fail(step);
  }

  ++step;  // quasi-locally-free: no isolated outer torsion at charge three
  if (primitive && c == 3) {
    if (lv[1].t == 0 && lv[0].t != 0) return fail(step);
  }

  ++step;  // restriction-compatibility: hook-specific degree bookkeeping
  if (hook) {
    if (lv[1].d + lv[1].t != lv[0].d - 1) return fail(step);
  }

  ++step;  // mu-semistable (implied by the partial sums; asserted last)
  if (!mu_semistable(lv)) return fail(step);

  return ConditionReport{true, "", -1};
}

struct RejectionBucket {
  long long count = 0;
  std::vector<std::vector<LineSheafClass>> samples;  // at most three per constraint
};

struct SolverResult {
  Partition support;
  std::string status;  // "classified", "candidate", or "not_classified"
  std::vector<FiltrationCase> cases;
  std::map<std::string, RejectionBucket> rejections;
  long long candidates_examined = 0;
};

namespace detail {

inline void record_outcome(SolverResult& out, const FiltrationCase& fc) {
  ++out.candidates_examined;
  const ConditionReport rep = instanton_conditions(fc);
  if (rep.ok) {
    out.cases.push_back(fc);
    return;
  }
  RejectionBucket& bucket = out.rejections[rep.first_violated];
  ++bucket.count;
  if (bucket.samples.size() < 3) bucket.samples.push_back(fc.levels);
}

// Full scan of the bounded grid |d| <= 2c+2, 0 <= t <= 2c.  `lock_outer_sum`
// restricts to d1 + d2 = that value (used for the charge-three case table).
inline SolverResult scan_grid(const Partition& nu, const long long* lock_outer_sum) {
  const int c = nu.weight();
  const int dmax = 2 * c + 2, tmax = 2 * c;
  SolverResult out;
  out.support = nu;
  out.status = "classified";

  FiltrationCase fc;
  fc.support = nu;
  fc.levels.assign(static_cast<std::size_t>(c), LineSheafClass{-dmax, 0});
  for (;;) {
    if (lock_outer_sum == nullptr ||
        (c >= 2 && fc.levels[0].d + fc.levels[1].d == *lock_outer_sum))
      record_outcome(out, fc);
    // Odometer over (d_1, ..., d_c, t_1, ..., t_c).
    int pos = 0;
    while (pos < c && fc.levels[static_cast<std::size_t>(pos)].d == dmax) {
      fc.levels[static_cast<std::size_t>(pos)].d = -dmax;
      ++pos;
    }
    if (pos < c) {
      ++fc.levels[static_cast<std::size_t>(pos)].d;
      continue;
    }
    pos = 0;
    while (pos < c && fc.levels[static_cast<std::size_t>(pos)].t == tmax) {
      fc.levels[static_cast<std::size_t>(pos)].t = 0;
      ++pos;
    }
    if (pos == c) break;
    ++fc.levels[static_cast<std::size_t>(pos)].t;
  }
  return out;
}

// For primitive supports beyond charge three the structural constraints pin
// the degrees almost completely (middle twists positive, deepest a step
// down), leaving at most one unit of torsion; enumerate just that slice.
inline SolverResult scan_primitive_candidates(const Partition& nu) {
  const int c = nu.weight();
  const int dmax = 2 * c + 2;
  SolverResult out;
  out.support = nu;
  out.status = "candidate";

  std::vector<int> d(static_cast<std::size_t>(c));
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == c - 1) {
      d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)] - 1;
      const int total = sum + d[static_cast<std::size_t>(i)];
      const int torsion = c - total;  // chi-total forces sum(d) + sum(t) = c
      if (torsion < 0 || torsion > 1) return;
      FiltrationCase fc;
      fc.support = nu;
      fc.levels.resize(static_cast<std::size_t>(c));
      for (int j = 0; j < c; ++j) fc.levels[static_cast<std::size_t>(j)].d = d[static_cast<std::size_t>(j)];
      if (torsion == 0) {
        record_outcome(out, fc);
        return;
      }
      for (int j = 0; j + 1 < c; ++j) {  // innermost stays torsion-free
        for (auto& s : fc.levels) s.t = 0;
        fc.levels[static_cast<std::size_t>(j)].t = 1;
        record_outcome(out, fc);
      }
      return;
    }
    // Remaining middle degrees are at least one; deepest at least the
    // second-deepest minus one, bounded below by 0 once middles are >= 1.
    const int floor_rest = (c - 1 - i - 1) + 0;
    for (int v = 1; v <= dmax; ++v) {
      if (sum + v + floor_rest > c) break;
      d[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, sum + v);
    }
  };
  for (int v1 = 1; v1 <= dmax; ++v1) {
    d[0] = v1;
    rec(rec, 1, v1);
  }
  return out;
}

}  // namespace detail

// Enumerates admissible filtration data for the given support.  Charges up to
// three are classified exhaustively over the bounded grid; primitive supports
// of higher charge yield constraint-consistent candidates; remaining shapes
// are not classified.
inline SolverResult solve(const Partition& nu) {
  if (nu.empty()) throw std::invalid_argument("empty support");
  const int c = nu.weight();
  SolverResult out;
  if (c <= 3) {
    out = detail::scan_grid(nu, nullptr);
  } else if (nu.is_primitive()) {
    out = detail::scan_primitive_candidates(nu);
  } else {
    out.support = nu;
    out.status = "not_classified";
    return out;
  }
  std::sort(out.cases.begin(), out.cases.end(),
            [](const FiltrationCase& a, const FiltrationCase& b) { return a.levels < b.levels; });
  for (const auto& fc : out.cases)
    for (const auto& s : fc.levels)
      if (s.d <= -(2 * c + 2) || s.d >= 2 * c + 2 || s.t >= 2 * c)
        throw std::logic_error("search bound binds on a returned case");
  return out;
}

// Row of the charge-three non-primitive case table, indexed by the outer
// degree sum z~ = d1 + d2; the complementary column is z- = 5 - z~.
struct CaseTableRow {
  int z_tilde = 0;
  bool feasible = false;
  long long chi_q2 = 0;    // chi of the depth-two subsheaf at twist -2
  int z_bar = 0;
  long long chi_rest = 0;  // chi of the outermost level at twist -2
  std::string exclusion_reason;  // first-violated constraint of the deepest-surviving candidate
};

inline std::vector<CaseTableRow> case_table_c3_nonprimitive() {
  const Partition hook({2, 1});
  const SolverResult classified = solve(hook);
  std::vector<CaseTableRow> table;
  for (int z = 0; z <= 5; ++z) {
    CaseTableRow row;
    row.z_tilde = z;
    row.z_bar = 5 - z;
    row.chi_q2 = z - 4;
    row.chi_rest = 4 - z;
    for (const auto& fc : classified.cases) {
      if (fc.levels[0].d + fc.levels[1].d != z) continue;
      row.feasible = true;
      if (detail::chi_trailing(fc.levels, 1, -2) != row.chi_q2 ||
          fc.levels[0].chi(-2) != row.chi_rest)
        throw std::logic_error("case table columns disagree with the surviving case");
    }
    if (!row.feasible) {
      // Deepest first-violation over the slice d1 + d2 = z of the full grid.
      const long long lock = z;
      const SolverResult slice = detail::scan_grid(hook, &lock);
      if (!slice.cases.empty()) throw std::logic_error("slice marked infeasible has a survivor");
      int deepest = -1;
      for (const auto& [name, bucket] : slice.rejections) {
        const auto& names = condition_names();
        const int idx = static_cast<int>(
            std::find(names.begin(), names.end(), name) - names.begin());
        if (idx > deepest) {
          deepest = idx;
          row.exclusion_reason = name;
        }
      }
    }
    table.push_back(std::move(row));
  }
  return table;
}

// Generalized rank and degree of a filtration class: one rank unit per level,
// degree counting twists and torsion lengths together.
struct GeneralizedClass {
  long long rank = 0;
  long long degree = 0;
  bool operator==(const GeneralizedClass&) const = default;
};

inline GeneralizedClass generalized_rank_degree(const std::vector<LineSheafClass>& levels) {
  GeneralizedClass g;
  g.rank = static_cast<long long>(levels.size());
  for (const auto& s : levels) g.degree += s.d + s.t;
  return g;
}

// chi = Deg + R (1 - g), solved for the genus.
inline Rational derive_genus(const Rational& chi, const GeneralizedClass& gc) {
  if (gc.rank == 0) throw std::invalid_argument("rank zero class has no genus");
  return Rational(1) - (chi - Rational(gc.degree)) / Rational(gc.rank);
}

inline bool riemann_roch_check(const Rational& chi, const GeneralizedClass& gc,
                               const Rational& genus) {
  return chi == Rational(gc.degree) + Rational(gc.rank) * (Rational(1) - genus);
}

}  // namespace instanton
