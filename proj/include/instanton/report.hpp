#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "instanton/adhm.hpp"
#include "instanton/filtration.hpp"
#include "instanton/json_io.hpp"
#include "instanton/moduli.hpp"
#include "instanton/torus.hpp"
#include "instanton/young.hpp"

namespace instanton {

inline constexpr const char* kSchemaVersion = "1";

// ---------------------------------------------------------------------------
// Classification report: one document per charge.

struct SolverSummary {
  std::string status;
  std::vector<std::vector<LineSheafClass>> cases;
  bool operator==(const SolverSummary&) const = default;
};

struct PartitionEntry {
  Partition partition;
  std::string ideal;
  std::vector<int> inner_weights;
  std::vector<int> outer_weights;
  UniPoly hilbert;
  Int scheme_dim;
  Int quotient_len;
  std::vector<Partition> chain;
  SolverSummary solver;
  bool operator==(const PartitionEntry&) const = default;
};

struct InvariantSummary {
  int passed = 0;
  int failed = 0;
  bool operator==(const InvariantSummary&) const = default;
};

struct ClassificationReport {
  int charge = 0;
  std::vector<PartitionEntry> entries;
  Int component_bound;
  std::optional<int> refined_count;  // present at charge three
  InvariantSummary invariants;
  bool operator==(const ClassificationReport&) const = default;
};

inline PartitionEntry build_partition_entry(const Partition& nu) {
  PartitionEntry e;
  e.partition = nu;
  e.ideal = partition_to_ideal(nu).str();
  const FreeResolution res = resolution(nu);
  e.inner_weights = res.inner_weights;
  e.outer_weights = res.outer_weights;
  e.hilbert = hilbert_poly_closed(nu);
  e.scheme_dim = hilbert_scheme_dim(nu);
  e.quotient_len = quotient_length(nu);
  e.chain = infinitesimal_filtration(nu);
  const SolverResult sr = solve(nu);
  e.solver.status = sr.status;
  for (const auto& fc : sr.cases) e.solver.cases.push_back(fc.levels);
  return e;
}

// Re-derives every stored number from scratch and cross-checks module
// identities; the summary counts individual checks.
inline InvariantSummary run_invariant_suite(const std::vector<PartitionEntry>& entries) {
  InvariantSummary s;
  const auto tally = [&s](bool ok) { ok ? ++s.passed : ++s.failed; };
  for (const auto& e : entries) {
    const Partition& nu = e.partition;
    int wmax = 0;
    long long wsum = 0;
    for (const auto& b : boxes(nu)) {
      wmax = std::max(wmax, b.weight());
      wsum += b.weight();
    }

    bool oracle_ok = true;
    for (int m = wmax; m <= wmax + 3; ++m)
      oracle_ok = oracle_ok && Rational(hilbert_fn_oracle(nu, m)) == e.hilbert.eval(Rational(m));
    tally(oracle_ok);

    tally(resolution_structure_chi(resolution(nu)) == e.hilbert);
    tally(e.quotient_len == Int(nu.weight() + wsum));
    tally(ideal_to_partition(partition_to_ideal(nu)) == nu);
    tally(hilbert_scheme_dim(nu.transpose()) == e.scheme_dim);
    tally(!e.chain.empty() && e.chain.back() == nu);

    bool cases_ok = true;
    for (const auto& lv : e.solver.cases) {
      FiltrationCase fc;
      fc.support = nu;
      fc.levels = lv;
      cases_ok = cases_ok && instanton_conditions(fc).ok;
      long long chi0 = 0;
      for (const auto& level : lv) chi0 += level.chi(0);
      cases_ok = cases_ok &&
                 derive_genus(Rational(chi0), generalized_rank_degree(lv)) == Rational(0);
    }
    tally(cases_ok);
  }
  return s;
}

// Entries are independent, so worker threads pull indices from a shared
// counter and write to disjoint slots; assembly order never changes.
inline ClassificationReport classify(int charge, int threads = 1) {
  if (charge < 1 || charge > 30) throw std::invalid_argument("charge out of range (1..30)");
  if (threads < 1) throw std::invalid_argument("thread count must be positive");

  ClassificationReport rep;
  rep.charge = charge;
  const std::vector<Partition> parts = partitions_of(charge);
  const int n = static_cast<int>(parts.size());
  rep.entries.resize(static_cast<std::size_t>(n));

  const int workers = std::min(threads, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i)
      rep.entries[static_cast<std::size_t>(i)] = build_partition_entry(parts[static_cast<std::size_t>(i)]);
  } else {
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const int i = next.fetch_add(1);
          if (i >= n) return;
          try {
            rep.entries[static_cast<std::size_t>(i)] =
                build_partition_entry(parts[static_cast<std::size_t>(i)]);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  rep.component_bound = component_lower_bound(charge).bound;
  if (charge == 3) rep.refined_count = refined_component_count_c3();
  rep.invariants = run_invariant_suite(rep.entries);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON serialization.

inline Json int_to_json(const Int& v) { return rational_to_json(Rational(v)); }

inline Int json_to_int(const Json& j, const std::string& path) {
  const Rational q = json_to_rational(j, path);
  if (!is_integer(q)) throw SchemaError(path + ": expected an integer");
  return rat_num(q);
}

inline Json unipoly_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& cf : p.coeffs()) arr.push_back(rational_to_json(cf));
  return arr;
}

inline UniPoly unipoly_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected a coefficient array");
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < j.size(); ++i)
    cs.push_back(json_to_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return UniPoly(std::move(cs));
}

inline Json levels_to_json(const std::vector<LineSheafClass>& levels) {
  Json arr = Json::array();
  for (const auto& s : levels) {
    Json one = Json::object();
    one["d"] = s.d;
    one["t"] = s.t;
    arr.push_back(std::move(one));
  }
  return arr;
}

inline std::vector<LineSheafClass> levels_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of levels");
  std::vector<LineSheafClass> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_object() || !j[i].contains("d") || !j[i].contains("t"))
      throw SchemaError(p + ": expected an object with d and t");
    LineSheafClass s;
    s.d = static_cast<int>(json_to_int(j[i]["d"], p + ".d").convert_to<long long>());
    s.t = static_cast<int>(json_to_int(j[i]["t"], p + ".t").convert_to<long long>());
    out.push_back(s);
  }
  return out;
}

inline Json int_list_to_json(const std::vector<int>& v) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

inline Json report_to_json(const ClassificationReport& r) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["charge"] = r.charge;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json one = Json::object();
    one["partition"] = e.partition.str();
    one["ideal"] = e.ideal;
    Json res = Json::object();
    res["inner"] = int_list_to_json(e.inner_weights);
    res["outer"] = int_list_to_json(e.outer_weights);
    one["resolution"] = std::move(res);
    one["hilbert_polynomial"] = unipoly_to_json(e.hilbert);
    one["hilbert_scheme_dim"] = int_to_json(e.scheme_dim);
    one["quotient_length"] = int_to_json(e.quotient_len);
    Json chain = Json::array();
    for (const auto& p : e.chain) chain.push_back(p.str());
    one["filtration_chain"] = std::move(chain);
    Json solver = Json::object();
    solver["status"] = e.solver.status;
    Json cases = Json::array();
    for (const auto& lv : e.solver.cases) cases.push_back(levels_to_json(lv));
    solver["cases"] = std::move(cases);
    one["solver"] = std::move(solver);
    entries.push_back(std::move(one));
  }
  j["partitions"] = std::move(entries);
  j["component_lower_bound"] = int_to_json(r.component_bound);
  if (r.refined_count.has_value()) j["refined_component_count"] = *r.refined_count;
  Json inv = Json::object();
  inv["passed"] = r.invariants.passed;
  inv["failed"] = r.invariants.failed;
  j["invariants"] = std::move(inv);
  return j;
}

namespace detail {
inline const Json& require_field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object() || !j.contains(name)) throw SchemaError(path + name + ": missing field");
  return j[name];
}

inline std::vector<int> int_list_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<int>(
        json_to_int(j[i], path + "[" + std::to_string(i) + "]").convert_to<long long>()));
  return out;
}
}  // namespace detail

inline ClassificationReport report_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("top level: expected an object");
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw SchemaError("schema_version: expected \"1\"");
  ClassificationReport r;
  r.charge = static_cast<int>(
      json_to_int(detail::require_field(j, "charge", ""), "charge").convert_to<long long>());
  const Json& entries = detail::require_field(j, "partitions", "");
  if (!entries.is_array()) throw SchemaError("partitions: expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "partitions[" + std::to_string(i) + "].";
    const Json& one = entries[i];
    PartitionEntry e;
    try {
      e.partition = Partition::parse(detail::require_field(one, "partition", path).get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw SchemaError(path + "partition: " + err.what());
    }
    e.ideal = detail::require_field(one, "ideal", path).get<std::string>();
    const Json& res = detail::require_field(one, "resolution", path);
    e.inner_weights =
        detail::int_list_from_json(detail::require_field(res, "inner", path + "resolution."),
                                   path + "resolution.inner");
    e.outer_weights =
        detail::int_list_from_json(detail::require_field(res, "outer", path + "resolution."),
                                   path + "resolution.outer");
    e.hilbert = unipoly_from_json(detail::require_field(one, "hilbert_polynomial", path),
                                  path + "hilbert_polynomial");
    e.scheme_dim = json_to_int(detail::require_field(one, "hilbert_scheme_dim", path),
                               path + "hilbert_scheme_dim");
    e.quotient_len =
        json_to_int(detail::require_field(one, "quotient_length", path), path + "quotient_length");
    const Json& chain = detail::require_field(one, "filtration_chain", path);
    if (!chain.is_array()) throw SchemaError(path + "filtration_chain: expected an array");
    for (const auto& p : chain) e.chain.push_back(Partition::parse(p.get<std::string>()));
    const Json& solver = detail::require_field(one, "solver", path);
    e.solver.status = detail::require_field(solver, "status", path + "solver.").get<std::string>();
    const Json& cases = detail::require_field(solver, "cases", path + "solver.");
    if (!cases.is_array()) throw SchemaError(path + "solver.cases: expected an array");
    for (std::size_t k = 0; k < cases.size(); ++k)
      e.solver.cases.push_back(
          levels_from_json(cases[k], path + "solver.cases[" + std::to_string(k) + "]"));
    r.entries.push_back(std::move(e));
  }
  r.component_bound = json_to_int(detail::require_field(j, "component_lower_bound", ""),
                                  "component_lower_bound");
  if (j.contains("refined_component_count"))
    r.refined_count = static_cast<int>(
        json_to_int(j["refined_component_count"], "refined_component_count").convert_to<long long>());
  const Json& inv = detail::require_field(j, "invariants", "");
  r.invariants.passed = static_cast<int>(
      json_to_int(detail::require_field(inv, "passed", "invariants."), "invariants.passed")
          .convert_to<long long>());
  r.invariants.failed = static_cast<int>(
      json_to_int(detail::require_field(inv, "failed", "invariants."), "invariants.failed")
          .convert_to<long long>());
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering (human-oriented; the JSON form is the stable contract).

namespace detail {
inline std::string twist_sum(std::vector<int> weights) {
  std::sort(weights.begin(), weights.end(), std::greater<int>());
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += " + ";
    out += "O(" + std::to_string(-weights[i]) + ")";
  }
  return out;
}

inline std::string levels_str(const std::vector<LineSheafClass>& lv) {
  std::string out = "[";
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (i) out += ", ";
    out += "(d=" + std::to_string(lv[i].d) + ", t=" + std::to_string(lv[i].t) + ")";
  }
  return out + "]";
}
}  // namespace detail

inline std::string render_classification_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "charge " << r.charge << ": " << r.entries.size() << " partition(s), component lower bound "
      << r.component_bound.str();
  if (r.refined_count.has_value()) out << ", refined case count " << *r.refined_count;
  out << "\n";
  for (const auto& e : r.entries) {
    out << "\npartition (" << e.partition.str() << ")\n";
    out << "  ideal              " << e.ideal << "\n";
    out << "  resolution         0 -> " << detail::twist_sum(e.outer_weights) << " -> "
        << detail::twist_sum(e.inner_weights) << " -> I -> 0\n";
    out << "  chi(m)             " << e.hilbert.str("m") << "\n";
    out << "  scheme dimension   " << e.scheme_dim.str() << "\n";
    out << "  quotient length    " << e.quotient_len.str() << "\n";
    out << "  filtration chain   ";
    for (std::size_t i = 0; i < e.chain.size(); ++i)
      out << (i ? " < " : "") << "(" << e.chain[i].str() << ")";
    out << "\n";
    out << "  filtration cases   " << e.solver.status;
    if (!e.solver.cases.empty()) {
      out << "\n";
      for (const auto& lv : e.solver.cases) out << "    " << detail::levels_str(lv) << "\n";
    } else {
      out << "\n";
    }
  }
  out << "\ninvariant checks: " << r.invariants.passed << " passed, " << r.invariants.failed
      << " failed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Single-command documents.

inline Json hilbert_report(const Partition& nu, int m_lo, int m_hi) {
  if (m_lo > m_hi) throw std::invalid_argument("empty m-range");
  const UniPoly chi = hilbert_poly_closed(nu);
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["partition"] = nu.str();
  j["ideal"] = partition_to_ideal(nu).str();
  j["hilbert_polynomial"] = unipoly_to_json(chi);
  Json values = Json::array();
  for (int m = m_lo; m <= m_hi; ++m) {
    Json row = Json::object();
    row["m"] = m;
    row["polynomial"] = rational_to_json(chi.eval(Rational(m)));
    if (m >= 0) {
      const Int direct = hilbert_fn_oracle(nu, m);
      row["function"] = int_to_json(direct);
      row["agree"] = Rational(direct) == chi.eval(Rational(m));
    }
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  return j;
}

inline std::string render_hilbert_text(const Json& j) {
  std::ostringstream out;
  out << "partition (" << j["partition"].get<std::string>() << "), ideal "
      << j["ideal"].get<std::string>() << "\n";
  out << "m, polynomial, function\n";
  for (const auto& row : j["values"]) {
    out << row["m"].get<int>() << ", " << row["polynomial"].dump();
    if (row.contains("function")) out << ", " << row["function"].dump();
    out << "\n";
  }
  return out.str();
}

inline Json resolution_report(const Partition& nu) {
  const FreeResolution res = resolution(nu);
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["partition"] = nu.str();
  j["ideal"] = partition_to_ideal(nu).str();
  j["inner"] = int_list_to_json(res.inner_weights);
  j["outer"] = int_list_to_json(res.outer_weights);
  j["display"] = "0 -> " + detail::twist_sum(res.outer_weights) + " -> " +
                 detail::twist_sum(res.inner_weights) + " -> I -> 0";
  j["euler_consistent"] = resolution_structure_chi(res) == hilbert_poly_closed(nu);
  return j;
}

inline std::string render_resolution_text(const Json& j) {
  std::ostringstream out;
  out << "partition (" << j["partition"].get<std::string>() << ")\n";
  out << "ideal      " << j["ideal"].get<std::string>() << "\n";
  out << "resolution " << j["display"].get<std::string>() << "\n";
  return out.str();
}

inline Json partitions_report(int charge, bool table) {
  if (charge < 1 || charge > 30) throw std::invalid_argument("charge out of range (1..30)");
  const PartitionCountPair count = partition_count(charge);
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["charge"] = charge;
  j["count"] = int_to_json(count.enumerative);
  j["count_generating_function"] = int_to_json(count.generating_function);
  j["methods_agree"] = count.agree();
  Json names = Json::array();
  const auto parts = partitions_of(charge);
  for (const auto& nu : parts) names.push_back(nu.str());
  j["partitions"] = std::move(names);
  if (table) {
    Json rows = Json::array();
    for (const auto& nu : parts) {
      Json row = Json::object();
      row["partition"] = nu.str();
      row["ideal"] = partition_to_ideal(nu).str();
      row["quotient_length"] = int_to_json(quotient_length(nu));
      row["hilbert_scheme_dim"] = int_to_json(hilbert_scheme_dim(nu));
      row["primitive"] = nu.is_primitive();
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
  }
  return j;
}

inline std::string render_partitions_text(const Json& j) {
  std::ostringstream out;
  out << "charge " << j["charge"].get<int>() << ": " << j["count"].dump() << " partition(s)\n";
  if (j.contains("table")) {
    out << "partition | ideal | quotient length | scheme dim | primitive\n";
    for (const auto& row : j["table"])
      out << "(" << row["partition"].get<std::string>() << ") | "
          << row["ideal"].get<std::string>() << " | " << row["quotient_length"].dump() << " | "
          << row["hilbert_scheme_dim"].dump() << " | "
          << (row["primitive"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    for (const auto& p : j["partitions"]) out << "(" << p.get<std::string>() << ")\n";
  }
  return out.str();
}

inline Json cases_report(const Partition& nu) {
  const SolverResult sr = solve(nu);
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["partition"] = nu.str();
  j["status"] = sr.status;
  j["candidates_examined"] = sr.candidates_examined;
  Json cases = Json::array();
  for (const auto& fc : sr.cases) cases.push_back(levels_to_json(fc.levels));
  j["cases"] = std::move(cases);
  Json rejections = Json::array();
  for (const auto& name : condition_names()) {
    const auto it = sr.rejections.find(name);
    if (it == sr.rejections.end()) continue;
    Json bucket = Json::object();
    bucket["constraint"] = name;
    bucket["count"] = it->second.count;
    Json samples = Json::array();
    for (const auto& lv : it->second.samples) samples.push_back(levels_to_json(lv));
    bucket["samples"] = std::move(samples);
    rejections.push_back(std::move(bucket));
  }
  j["rejections"] = std::move(rejections);
  if (nu.parts() == std::vector<int>{2, 1}) {
    Json table = Json::array();
    for (const auto& row : case_table_c3_nonprimitive()) {
      Json r = Json::object();
      r["outer_degree_sum"] = row.z_tilde;
      r["feasible"] = row.feasible;
      r["chi_subsheaf"] = row.chi_q2;
      r["complement"] = row.z_bar;
      r["chi_restriction"] = row.chi_rest;
      if (!row.feasible) r["exclusion"] = row.exclusion_reason;
      table.push_back(std::move(r));
    }
    j["case_table"] = std::move(table);
  }
  return j;
}

inline std::string render_cases_text(const Json& j) {
  std::ostringstream out;
  out << "partition (" << j["partition"].get<std::string>() << "): "
      << j["status"].get<std::string>() << ", " << j["cases"].size() << " case(s) out of "
      << j["candidates_examined"].dump() << " candidate(s)\n";
  for (const auto& lv : j["cases"]) {
    out << "  [";
    bool first = true;
    for (const auto& s : lv) {
      if (!first) out << ", ";
      first = false;
      out << "(d=" << s["d"].get<int>() << ", t=" << s["t"].get<int>() << ")";
    }
    out << "]\n";
  }
  if (!j["rejections"].empty()) {
    out << "rejections by first violated constraint:\n";
    for (const auto& bucket : j["rejections"])
      out << "  " << bucket["constraint"].get<std::string>() << ": " << bucket["count"].dump()
          << "\n";
  }
  if (j.contains("case_table")) {
    out << "case table by outer degree sum:\n";
    for (const auto& row : j["case_table"]) {
      out << "  z=" << row["outer_degree_sum"].get<int>()
          << (row["feasible"].get<bool>() ? " feasible" : " infeasible");
      if (row.contains("exclusion")) out << " (" << row["exclusion"].get<std::string>() << ")";
      out << "\n";
    }
  }
  return out.str();
}

struct AdhmCheckOutcome {
  Json document;
  bool verification_ok = false;
};

inline AdhmCheckOutcome adhm_check_report(const AdhmDatum& x, bool fixed_mode) {
  AdhmCheckOutcome out;
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["c"] = x.c;
  j["r"] = x.r;

  const EquationsVerdict eq = check_equations(x);
  Json eqj = Json::object();
  eqj["ok"] = eq.ok;
  Json violated = Json::array();
  for (int v : eq.violated) violated.push_back(v);
  eqj["violated"] = std::move(violated);
  j["equations"] = std::move(eqj);

  j["monad_is_complex"] = complex_condition(build_monad(x));

  const StabilityReport st = stability_closure(x);
  Json stj = Json::object();
  stj["stable"] = st.stable;
  stj["closure_dim"] = st.closure_dim;
  j["stability"] = std::move(stj);

  const WeakStabilityReport wk = weak_stability(x);
  Json wkj = Json::object();
  wkj["verdict"] = wk.verdict == WeakVerdict::weakly_stable    ? "weakly_stable"
                   : wk.verdict == WeakVerdict::destabilized   ? "destabilized"
                                                               : "indeterminate";
  if (wk.destabilizing_line.has_value()) {
    Json line = Json::array();
    for (const auto& v : *wk.destabilizing_line) line.push_back(rational_to_json(v));
    wkj["destabilizing_line"] = std::move(line);
  }
  j["weak_stability"] = std::move(wkj);

  bool fixed_ok = true;
  if (fixed_mode) {
    const FixedCandidateVerdict cand = is_fixed_candidate(x);
    Json cj = Json::object();
    cj["ok"] = cand.ok;
    Json failures = Json::array();
    for (const auto& f : cand.failures) failures.push_back(f);
    cj["failures"] = std::move(failures);
    j["fixed_candidate"] = std::move(cj);

    const FixednessScan scan = scan_torus_fixedness(x);
    Json sj = Json::object();
    sj["fixed"] = scan.fixed;
    Json gens = Json::array();
    for (bool g : scan.generator_fixed) gens.push_back(g);
    sj["generator_fixed"] = std::move(gens);
    Json exps = Json::array();
    for (const auto& ks : scan.framing_exponents) {
      Json one = Json::array();
      for (long long k : ks) one.push_back(k);
      exps.push_back(std::move(one));
    }
    sj["framing_exponents"] = std::move(exps);
    j["fixedness"] = std::move(sj);
    fixed_ok = scan.fixed;
  }

  out.verification_ok = eq.ok && fixed_ok;
  j["ok"] = out.verification_ok;
  out.document = std::move(j);
  return out;
}

inline std::string render_adhm_text(const Json& j) {
  std::ostringstream out;
  out << "datum c=" << j["c"].get<int>() << " r=" << j["r"].get<int>() << "\n";
  out << "equations          " << (j["equations"]["ok"].get<bool>() ? "ok" : "violated") << "\n";
  out << "monad is complex   " << (j["monad_is_complex"].get<bool>() ? "yes" : "no") << "\n";
  out << "stability          "
      << (j["stability"]["stable"].get<bool>() ? "stable" : "not stable") << " (closure dim "
      << j["stability"]["closure_dim"].get<int>() << ")\n";
  out << "weak stability     " << j["weak_stability"]["verdict"].get<std::string>() << "\n";
  if (j.contains("fixedness")) {
    out << "fixed candidate    " << (j["fixed_candidate"]["ok"].get<bool>() ? "ok" : "no") << "\n";
    out << "torus fixed        " << (j["fixedness"]["fixed"].get<bool>() ? "yes" : "no") << "\n";
  }
  out << "overall            " << (j["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  return out.str();
}

inline Json chow_to_json(const ChowClass& e) {
  Json j = Json::object();
  j["r"] = rational_to_json(e.r);
  j["c1"] = rational_to_json(e.c1);
  j["c2"] = rational_to_json(e.c2);
  j["c3"] = rational_to_json(e.c3);
  return j;
}

inline Json poincare_report(int charge) {
  if (charge < 1) throw std::invalid_argument("charge must be positive");
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["charge"] = charge;
  if (charge == 1) {
    const IntPoly p = poincare_poly_c1();
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(int_to_json(p.coeff(i)));
    j["betti"] = std::move(coeffs);
    j["degree"] = p.degree();
    j["euler_characteristic"] = int_to_json(p.eval(Int(-1)));
    j["odd_factor_divides"] =
        exact_quotient(p, IntPoly({Int(1), Int(0), Int(0), Int(1)})).has_value();
  } else {
    j["betti"] = nullptr;
    j["factorization"] = "P(t) = P_base(t) * (1 + t^3), base factor not computed at this charge";
    Json factor = Json::array();
    for (int v : {1, 0, 0, 1}) factor.push_back(v);
    j["known_factor"] = std::move(factor);
    j["euler_characteristic"] = 0;
  }
  return j;
}

inline std::string render_poincare_text(const Json& j) {
  std::ostringstream out;
  out << "charge " << j["charge"].get<int>() << "\n";
  if (j["betti"].is_null()) {
    out << j["factorization"].get<std::string>() << "\n";
    out << "euler characteristic 0 (forced by the 1 + t^3 factor)\n";
  } else {
    out << "poincare polynomial coefficients (ascending): ";
    for (std::size_t i = 0; i < j["betti"].size(); ++i) out << (i ? " " : "") << j["betti"][i].dump();
    out << "\n";
    out << "euler characteristic " << j["euler_characteristic"].dump() << "\n";
  }
  return out.str();
}

inline Json pairing_report() {
  const ChowClass o = ch_twist(0);
  const ChowClass q = ch_line_sheaf(1);
  const ChowClass ideal = o - q;
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  Json classes = Json::object();
  classes["structure_sheaf"] = chow_to_json(o);
  classes["line_sheaf_degree_1"] = chow_to_json(q);
  classes["ideal_complex"] = chow_to_json(ideal);
  classes["todd"] = chow_to_json(todd_p3());
  j["classes"] = std::move(classes);
  Json pairings = Json::object();
  pairings["chi_O_O"] = rational_to_json(euler_pairing(o, o));
  pairings["chi_I_Q"] = rational_to_json(euler_pairing(ideal, q));
  pairings["chi_Q_Q"] = rational_to_json(euler_pairing(q, q));
  j["pairings"] = std::move(pairings);
  return j;
}

inline std::string render_pairing_text(const Json& j) {
  std::ostringstream out;
  out << "Euler pairings through the truncated intersection ring:\n";
  out << "  chi(O, O) = " << j["pairings"]["chi_O_O"].dump() << "\n";
  out << "  chi(I, Q) = " << j["pairings"]["chi_I_Q"].dump() << "\n";
  out << "  chi(Q, Q) = " << j["pairings"]["chi_Q_Q"].dump() << "\n";
  out << "with ch(Q) = " << j["classes"]["line_sheaf_degree_1"].dump()
      << " and ch(I) = " << j["classes"]["ideal_complex"].dump() << "\n";
  return out.str();
}

}  // namespace instanton
