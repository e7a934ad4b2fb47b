// Command-line interface: exact classification and verification reports for
// framed instanton sheaf data. JSON output is the stable contract; text is a
// human-oriented rendering. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "instanton/json_io.hpp"
#include "instanton/report.hpp"
#include "instanton/selftest.hpp"

#ifndef INSTANTON_DATA_DIR
#define INSTANTON_DATA_DIR "data"
#endif

using namespace instanton;

namespace {

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  out << payload;
  return out ? 0 : 2;
}

int emit_report(const Json& doc, const std::string& text, const std::string& format,
                const std::string& out_path) {
  return emit(format == "text" ? text : doc.dump(2) + "\n", out_path);
}

std::pair<int, int> parse_m_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
    throw std::invalid_argument("--m-range expects lo:hi");
  std::size_t used = 0;
  const int lo = std::stoi(s.substr(0, colon), &used);
  if (used != colon) throw std::invalid_argument("--m-range expects integer bounds");
  const std::string hi_part = s.substr(colon + 1);
  const int hi = std::stoi(hi_part, &used);
  if (used != hi_part.size()) throw std::invalid_argument("--m-range expects integer bounds");
  if (lo > hi) throw std::invalid_argument("--m-range bounds are out of order");
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic reports for framed instanton sheaf data"};
  app.require_subcommand(1);

  int charge = 1;
  int threads = 1;
  std::string partition_str;
  std::string input_path;
  std::string out_path;
  std::string format = "json";
  std::string m_range = "0:10";
  std::string data_dir = INSTANTON_DATA_DIR;
  bool fixed_mode = false;
  bool with_table = false;
  bool demo = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
  };

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "full per-partition classification report for a charge");
  cmd_classify->add_option("--charge", charge, "second Chern class (1..30)")->required();
  cmd_classify->add_option("--threads", threads, "worker threads (output is identical)");
  add_common(cmd_classify);

  CLI::App* cmd_hilbert =
      app.add_subcommand("hilbert", "Hilbert polynomial and function values for a partition");
  cmd_hilbert->add_option("--partition", partition_str, "partition, e.g. 3,3,2")->required();
  cmd_hilbert->add_option("--m-range", m_range, "twist range lo:hi");
  add_common(cmd_hilbert);

  CLI::App* cmd_resolution =
      app.add_subcommand("resolution", "minimal free resolution of a partition ideal");
  cmd_resolution->add_option("--partition", partition_str, "partition, e.g. 4,3,1")->required();
  add_common(cmd_resolution);

  CLI::App* cmd_partitions =
      app.add_subcommand("partitions", "partitions of a charge and their count");
  cmd_partitions->add_option("--charge", charge, "charge to enumerate (1..30)")->required();
  cmd_partitions->add_flag("--table", with_table, "include per-partition invariants");
  add_common(cmd_partitions);

  CLI::App* cmd_cases =
      app.add_subcommand("cases", "filtration case solver output for a partition");
  cmd_cases->add_option("--partition", partition_str, "support partition")->required();
  add_common(cmd_cases);

  CLI::App* cmd_adhm =
      app.add_subcommand("adhm-check", "verify a matrix datum from a JSON file");
  cmd_adhm->add_option("--input", input_path, "path to the datum JSON")->required();
  cmd_adhm->add_flag("--fixed", fixed_mode, "also check torus fixedness");
  add_common(cmd_adhm);

  CLI::App* cmd_poincare =
      app.add_subcommand("poincare", "Poincare polynomial data for a charge");
  cmd_poincare->add_option("--charge", charge, "charge (full data at charge 1)")->required();
  add_common(cmd_poincare);

  CLI::App* cmd_pairing = app.add_subcommand("pairing", "Euler pairing table");
  cmd_pairing->add_flag("--demo", demo, "print the pairing table (default behavior)");
  add_common(cmd_pairing);

  CLI::App* cmd_selftest =
      app.add_subcommand("selftest", "run every acceptance criterion");
  cmd_selftest->add_option("--data", data_dir, "data directory with the sample data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_classify)) {
      const ClassificationReport rep = classify(charge, threads);
      return emit_report(report_to_json(rep), render_classification_text(rep), format, out_path);
    }
    if (app.got_subcommand(cmd_hilbert)) {
      const auto [lo, hi] = parse_m_range(m_range);
      const Json doc = hilbert_report(Partition::parse(partition_str), lo, hi);
      return emit_report(doc, render_hilbert_text(doc), format, out_path);
    }
    if (app.got_subcommand(cmd_resolution)) {
      const Json doc = resolution_report(Partition::parse(partition_str));
      return emit_report(doc, render_resolution_text(doc), format, out_path);
    }
    if (app.got_subcommand(cmd_partitions)) {
      const Json doc = partitions_report(charge, with_table);
      return emit_report(doc, render_partitions_text(doc), format, out_path);
    }
    if (app.got_subcommand(cmd_cases)) {
      const Json doc = cases_report(Partition::parse(partition_str));
      return emit_report(doc, render_cases_text(doc), format, out_path);
    }
    if (app.got_subcommand(cmd_adhm)) {
      const AdhmDatum x = adhm_from_json(parse_json_text(read_file(input_path)));
      const AdhmCheckOutcome outcome = adhm_check_report(x, fixed_mode);
      const int io = emit_report(outcome.document, render_adhm_text(outcome.document), format,
                                 out_path);
      if (io != 0) return io;
      return outcome.verification_ok ? 0 : 1;
    }
    if (app.got_subcommand(cmd_poincare)) {
      const Json doc = poincare_report(charge);
      return emit_report(doc, render_poincare_text(doc), format, out_path);
    }
    if (app.got_subcommand(cmd_pairing)) {
      (void)demo;  // the table is the only output; the flag is accepted for symmetry
      const Json doc = pairing_report();
      return emit_report(doc, render_pairing_text(doc), format, out_path);
    }
    if (app.got_subcommand(cmd_selftest)) {
      bool all_pass = true;
      for (const CriterionResult& r : run_all_criteria(data_dir)) {
        std::printf("criterion %02d %s: %s (%s)\n", r.number, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.detail.c_str());
        all_pass = all_pass && r.pass;
      }
      std::printf("%s\n", all_pass ? "all criteria passed" : "some criteria failed");
      return all_pass ? 0 : 1;
    }
  } catch (const JsonParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
