// Copyright 2026 The pancake-color Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pancake/bounds.hpp"
#include "pancake/constructive.hpp"
#include "pancake/domsets.hpp"
#include "pancake/errors.hpp"
#include "pancake/quotient.hpp"
#include "pancake/registry.hpp"
#include "pancake/solver.hpp"

#ifndef PANCAKE_VERSION
#define PANCAKE_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace pancake;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitUsage = 64;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("PANCAKE_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Shared report envelope: every subcommand fills inputs/results and timing.
struct RunReport {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json timing = json::object();

  json to_json() const {
    return json{{"command", command},
                {"version", PANCAKE_VERSION},
                {"inputs", inputs},
                {"results", results},
                {"timing", timing}};
  }
};

void emit(const RunReport& report, bool as_json, const std::string& human_text) {
  if (as_json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << human_text;
  }
}

json verify_report_to_json(const VerifyReport& report) {
  json witnesses = json::array();
  for (const Edge& e : report.violation_witnesses) {
    witnesses.push_back({{"u", e.u.str()}, {"v", e.v.str()}, {"generator", e.generator}});
  }
  json perfect_witnesses = json::array();
  for (const Permutation& p : report.perfect_witnesses) perfect_witnesses.push_back(p.str());
  return json{{"vertices", report.vertices},
              {"edges", report.edges},
              {"proper", report.proper},
              {"violations", report.violations},
              {"violation_witnesses", witnesses},
              {"class_sizes", report.class_sizes},
              {"equitable", report.equitable},
              {"strongly_equitable", report.strongly_equitable},
              {"perfect_checked", report.perfect_checked},
              {"perfect", report.perfect},
              {"perfect_witnesses", perfect_witnesses}};
}

std::string verify_report_to_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "vertices " << report.vertices << ", edges " << report.edges << '\n';
  os << "proper: " << (report.proper ? "yes" : "no");
  if (!report.proper) os << " (" << report.violations << " monochromatic edges)";
  os << '\n';
  os << "class sizes:";
  for (const auto size : report.class_sizes) os << ' ' << size;
  os << '\n';
  os << "equitable: " << (report.equitable ? "yes" : "no")
     << (report.strongly_equitable ? " (all classes equal)" : "") << '\n';
  if (report.perfect_checked) {
    os << "perfect: " << (report.perfect ? "yes" : "no") << '\n';
  }
  for (const Edge& e : report.violation_witnesses) {
    os << "  violation: " << e.u.str() << " - " << e.v.str() << " via r_" << e.generator << '\n';
  }
  return os.str();
}

// Parses "7,3" into a block scheme.
BlockScheme parse_blocks(const std::string& text) {
  BlockScheme scheme;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    scheme.sizes.push_back(std::stoi(item));
  }
  if (scheme.sizes.empty()) throw std::invalid_argument("empty block list '" + text + "'");
  return scheme;
}

Coloring make_coloring(const std::string& method, int n, const std::string& blocks) {
  if (method == "compose") {
    if (blocks.empty()) {
      throw std::invalid_argument("--method compose requires --blocks (e.g. --blocks 4,2)");
    }
    const BlockScheme scheme = parse_blocks(blocks);
    if (scheme.n() != n) {
      throw std::invalid_argument("block sizes sum to " + std::to_string(scheme.n()) +
                                  " but n = " + std::to_string(n));
    }
    return compose(scheme);
  }
  return named_coloring(method, n);
}

struct CommonVerifyFlags {
  bool verify = false;
  bool equitable = false;
  bool perfect = false;
};

// Runs the requested verifier set and merges their reports (the perfect pass
// is separate because it streams its own scan).
VerifyReport run_verifiers(const PancakeView& view, const Coloring& coloring,
                           const CommonVerifyFlags& flags, int threads) {
  VerifyReport report = flags.equitable ? verify_equitable(view, coloring, threads)
                                        : verify_proper(view, coloring, threads);
  if (flags.perfect) {
    const VerifyReport perfect = verify_perfect(view, coloring);
    report.perfect_checked = true;
    report.perfect = perfect.perfect;
    report.perfect_witnesses = perfect.perfect_witnesses;
  }
  return report;
}

int run_bounds(int n, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  const BoundReport bounds = upper_bound_table(n);
  RunReport report;
  report.command = "bounds";
  report.inputs = {{"n", n}};
  json rows = json::array();
  for (const BoundRow& row : bounds.rows) {
    rows.push_back({{"id", row.id},
                    {"value", row.value},
                    {"applicable", row.applicable},
                    {"detail", row.detail}});
  }
  report.results = {{"n", bounds.n},
                    {"rows", rows},
                    {"best_upper", bounds.best_upper},
                    {"lower", bounds.lower}};
  if (bounds.known_chi) report.results["known_chi"] = *bounds.known_chi;
  report.timing = {{"total_seconds", seconds_since(start)}};

  std::ostringstream os;
  os << "upper bounds for the pancake graph on " << n << " symbols\n";
  for (const BoundRow& row : bounds.rows) {
    os << "  " << row.id << ": ";
    if (row.applicable) {
      os << row.value;
      if (!row.detail.empty()) os << "   (" << row.detail << ")";
    } else {
      os << "not applicable";
    }
    os << '\n';
  }
  if (bounds.known_chi) os << "  known chromatic number: " << *bounds.known_chi << '\n';
  os << "  best upper bound: " << bounds.best_upper << ", lower bound: " << bounds.lower << '\n';
  emit(report, as_json, os.str());
  return kExitOk;
}

int run_color(int n, const std::string& method, const std::string& blocks,
              const std::string& out_path, const CommonVerifyFlags& flags, int threads,
              bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  const Coloring coloring = make_coloring(method, n, blocks);
  RunReport report;
  report.command = "color";
  report.inputs = {{"n", n}, {"method", method}};
  if (!blocks.empty()) report.inputs["blocks"] = blocks;
  if (!out_path.empty()) report.inputs["out"] = out_path;
  report.results = {{"k", coloring.k()}, {"name", coloring.name()}};

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    write_coloring(file, coloring);
  }

  int exit_code = kExitOk;
  std::ostringstream os;
  os << "coloring '" << coloring.name() << "' on " << n << " symbols with " << coloring.k()
     << " colors\n";
  if (flags.verify || flags.equitable || flags.perfect) {
    const auto verify_start = std::chrono::steady_clock::now();
    const VerifyReport verified = run_verifiers(PancakeView::full(n), coloring, flags, threads);
    report.results["verify"] = verify_report_to_json(verified);
    report.timing["verify_seconds"] = seconds_since(verify_start);
    os << verify_report_to_text(verified);
    if (!verified.proper) exit_code = kExitVerifyFailed;
  }
  if (!out_path.empty()) os << "written to " << out_path << '\n';
  report.timing["total_seconds"] = seconds_since(start);
  emit(report, as_json, os.str());
  return exit_code;
}

int run_verify(int n, const std::string& file, const std::string& method,
               const std::string& blocks, CommonVerifyFlags flags, int threads, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<Coloring> coloring;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open coloring file '" + file + "'");
    coloring = read_coloring(in, file);
    if (coloring->n() != n) {
      throw std::invalid_argument("coloring file is for n = " + std::to_string(coloring->n()) +
                                  ", expected " + std::to_string(n));
    }
  } else if (!method.empty()) {
    coloring = make_coloring(method, n, blocks);
  } else {
    throw std::invalid_argument("verify needs a coloring file or --method");
  }

  flags.verify = true;
  const VerifyReport verified = run_verifiers(PancakeView::full(n), *coloring, flags, threads);

  RunReport report;
  report.command = "verify";
  report.inputs = {{"n", n}};
  if (!file.empty()) report.inputs["file"] = file;
  if (!method.empty()) report.inputs["method"] = method;
  report.results = verify_report_to_json(verified);
  report.timing = {{"total_seconds", seconds_since(start)}};
  emit(report, as_json, verify_report_to_text(verified));
  return verified.proper ? kExitOk : kExitVerifyFailed;
}

int run_domsets(int n, int first, int last, bool partition, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "domsets";
  report.inputs = {{"n", n}};

  if (partition) {
    const PartitionReport part = partition_check(n);
    report.results = {{"partition", {{"ok", part.ok}, {"parts", part.parts}, {"part_size", part.part_size}}}};
    report.timing = {{"total_seconds", seconds_since(start)}};
    std::ostringstream os;
    os << "partition into D_i^j: " << (part.ok ? "ok" : "BROKEN") << ", " << part.parts
       << " parts of size " << part.part_size << '\n';
    emit(report, as_json, os.str());
    return part.ok ? kExitOk : kExitVerifyFailed;
  }

  DomSetId id{first, last > 0 ? std::optional<int>(last) : std::nullopt};
  report.inputs["first"] = first;
  if (last > 0) report.inputs["last"] = last;
  const auto members = dom_set(n, id);

  json certificate;
  std::string cert_text;
  bool efficient = true;
  if (n <= 10) {
    // D_i dominates all of P_n; D_i^j dominates the copy with last element j.
    const PancakeView scope =
        last > 0 ? PancakeView::copy_of(n, last) : PancakeView::full(n);
    const auto check = is_efficient_dominating(scope, members);
    efficient = check.efficient;
    json witnesses = json::array();
    if (check.witness) {
      witnesses.push_back({{"vertex", check.witness->str()},
                           {"neighbors_in_set", check.witness_neighbors_in_set}});
    }
    certificate = {{"independent", check.independent},
                   {"unique_domination", check.efficient},
                   {"witnesses", witnesses}};
    cert_text = std::string("independent: ") + (check.independent ? "yes" : "no") +
                ", unique domination: " + (check.efficient ? "yes" : "no") + "\n";
  } else {
    certificate = {{"skipped", "certificate scan is capped at n = 10"}};
    cert_text = "certificate scan skipped (n > 10)\n";
  }

  json member_list = json::array();
  std::ostringstream os;
  for (const Permutation& p : members) {
    member_list.push_back(p.str());
    os << p.str() << '\n';
  }
  os << cert_text;
  report.results = {{"size", members.size()}, {"members", member_list}, {"certificate", certificate}};
  report.timing = {{"total_seconds", seconds_since(start)}};
  emit(report, as_json, os.str());
  return efficient ? kExitOk : kExitVerifyFailed;
}

int run_quotient(int n, const std::string& dimacs_path, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  const QuotientGraph q = QuotientGraph::build(n);
  const auto colors = quotient_coloring(n);
  const bool proper = quotient_coloring_proper(n);

  if (!dimacs_path.empty()) {
    std::ofstream file(dimacs_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + dimacs_path + "'");
    write_quotient_dimacs(file, q);
  }

  RunReport report;
  report.command = "quotient";
  report.inputs = {{"n", n}};
  if (!dimacs_path.empty()) report.inputs["dimacs"] = dimacs_path;
  json coloring_rows = json::array();
  for (int idx = 0; idx < q.order(); ++idx) {
    const auto v = q.vertex(idx);
    coloring_rows.push_back({{"i", v.i}, {"j", v.j}, {"color", colors[static_cast<std::size_t>(idx)]}});
  }
  report.results = {{"vertices", q.order()},
                    {"edges", q.edge_count()},
                    {"colors", n - 1},
                    {"proper", proper},
                    {"coloring", coloring_rows}};
  report.timing = {{"total_seconds", seconds_since(start)}};

  std::ostringstream os;
  os << "quotient graph on " << q.order() << " vertices, " << q.edge_count() << " edges, "
     << (n - 1) << " colors (proper: " << (proper ? "yes" : "no") << ")\n";
  for (int idx = 0; idx < q.order(); ++idx) {
    const auto v = q.vertex(idx);
    os << "  (" << v.i << "," << v.j << ") -> " << colors[static_cast<std::size_t>(idx)] << '\n';
  }
  if (!dimacs_path.empty()) os << "DIMACS written to " << dimacs_path << '\n';
  emit(report, as_json, os.str());
  return proper ? kExitOk : kExitVerifyFailed;
}

int run_exact_chi(int n, double timeout, std::uint64_t max_nodes, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  SearchBudget budget;
  budget.max_seconds = timeout;
  budget.max_nodes = max_nodes;
  const ChiResult result = exact_chi(PancakeView::full(n), budget);

  RunReport report;
  report.command = "exact-chi";
  report.inputs = {{"n", n}, {"timeout", timeout}};
  report.results = {{"decided", result.decided},
                    {"lower", result.lower},
                    {"upper", result.upper},
                    {"nodes", result.nodes}};
  if (result.chi) report.results["chi"] = *result.chi;
  report.timing = {{"total_seconds", seconds_since(start)},
                   {"solve_seconds", result.elapsed_seconds}};

  std::ostringstream os;
  if (result.decided) {
    os << "chi = " << *result.chi << " (decided in " << result.nodes << " nodes)\n";
  } else {
    os << "undecided within budget: " << result.lower << " <= chi <= " << result.upper << " ("
       << result.nodes << " nodes)\n";
  }
  emit(report, as_json, os.str());
  return result.decided ? kExitOk : kExitTimeout;
}

int run_search(int n, int k, const std::string& mode_name, std::uint32_t seed, double timeout,
               std::uint64_t max_nodes, int threads, const std::string& initial_path,
               const std::string& out_path, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  SolveMode mode = SolveMode::automatic;
  if (mode_name == "complete") mode = SolveMode::complete;
  else if (mode_name == "heuristic") mode = SolveMode::heuristic;
  else if (mode_name != "auto") {
    throw std::invalid_argument("unknown mode '" + mode_name + "' (auto, complete, heuristic)");
  }

  std::optional<Coloring> initial;
  if (!initial_path.empty()) {
    std::ifstream in(initial_path);
    if (!in) throw std::invalid_argument("cannot open initial coloring '" + initial_path + "'");
    initial = read_coloring(in, initial_path);
    if (initial->n() != n) {
      throw std::invalid_argument("initial coloring is for n = " + std::to_string(initial->n()) +
                                  ", expected " + std::to_string(n));
    }
  }

  SearchBudget budget;
  budget.max_seconds = timeout;
  budget.max_nodes = max_nodes;
  budget.seed = seed;
  const ViewSolveOutcome outcome = find_k_coloring(PancakeView::full(n), k, budget, mode, threads,
                                                   initial ? &*initial : nullptr);

  const char* status_name = outcome.status == SolveStatus::colored  ? "colored"
                            : outcome.status == SolveStatus::unsat ? "unsat"
                                                                   : "timeout";
  if (outcome.status == SolveStatus::colored && !out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    write_coloring(file, *outcome.coloring);
  }

  RunReport report;
  report.command = "search";
  report.inputs = {{"n", n}, {"k", k}, {"mode", mode_name}, {"seed", seed}, {"timeout", timeout}};
  if (!initial_path.empty()) report.inputs["initial"] = initial_path;
  if (!out_path.empty()) report.inputs["out"] = out_path;
  report.results = {{"status", status_name}, {"nodes", outcome.nodes}};
  report.timing = {{"total_seconds", seconds_since(start)},
                   {"solve_seconds", outcome.elapsed_seconds}};

  std::ostringstream os;
  os << "k = " << k << ": " << status_name << " (" << outcome.nodes << " nodes, "
     << outcome.elapsed_seconds << " s)\n";
  if (outcome.status == SolveStatus::colored && !out_path.empty()) {
    os << "coloring written to " << out_path << '\n';
  }
  emit(report, as_json, os.str());
  return outcome.status == SolveStatus::timeout ? kExitTimeout : kExitOk;
}

int run_export_dimacs(int n, const std::string& out_path, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  const auto view = PancakeView::full(n);
  if (out_path.empty()) {
    write_dimacs(std::cout, view);
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    write_dimacs(file, view);
  }
  RunReport report;
  report.command = "export-dimacs";
  report.inputs = {{"n", n}};
  if (!out_path.empty()) report.inputs["out"] = out_path;
  report.results = {{"vertices", view.vertex_count()}, {"edges", view.edge_count()}};
  report.timing = {{"total_seconds", seconds_since(start)}};
  std::ostringstream os;
  if (!out_path.empty()) {
    os << "DIMACS for " << view.vertex_count() << " vertices written to " << out_path << '\n';
  }
  // When streaming to stdout, the graph itself is the output; suppress the
  // human summary so the format stays parseable.
  emit(report, as_json && !out_path.empty() ? true : false, os.str());
  if (as_json && out_path.empty()) {
    std::cerr << "note: --json ignored when DIMACS streams to standard output\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pancake graph colorings: constructions, verification, bounds and exact search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PANCAKE_VERSION);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable run report");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate all upper-bound formulas");
  int bounds_n = 0;
  bounds_cmd->add_option("n", bounds_n, "number of symbols")->required()->check(CLI::Range(2, 1000000));

  // color
  auto* color_cmd = app.add_subcommand("color", "produce a built-in coloring");
  int color_n = 0;
  std::string color_method = "equitable-nm1";
  std::string color_blocks;
  std::string color_out;
  CommonVerifyFlags color_flags;
  int color_threads = 0;
  color_cmd->add_option("n", color_n, "number of symbols")->required()->check(CLI::Range(1, 12));
  color_cmd->add_option("--method", color_method,
                        "first-element, constant, parity2, parity4, equitable-nm1, compose");
  color_cmd->add_option("--blocks", color_blocks, "comma-separated block sizes for compose");
  color_cmd->add_option("--out", color_out, "write the coloring file here");
  color_cmd->add_flag("--verify", color_flags.verify, "verify properness");
  color_cmd->add_flag("--equitable", color_flags.equitable, "also check class-size balance");
  color_cmd->add_flag("--perfect", color_flags.perfect, "also check perfectness");
  color_cmd->add_option("--threads", color_threads, "worker threads (default: PANCAKE_THREADS or all cores)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a coloring file or named method");
  int verify_n = 0;
  std::string verify_file;
  std::string verify_method;
  std::string verify_blocks;
  CommonVerifyFlags verify_flags;
  int verify_threads = 0;
  verify_cmd->add_option("n", verify_n, "number of symbols")->required()->check(CLI::Range(1, 12));
  verify_cmd->add_option("file", verify_file, "coloring file to verify");
  verify_cmd->add_option("--method", verify_method, "verify a built-in method instead of a file");
  verify_cmd->add_option("--blocks", verify_blocks, "blocks for --method compose");
  verify_cmd->add_flag("--equitable", verify_flags.equitable, "also check class-size balance");
  verify_cmd->add_flag("--perfect", verify_flags.perfect, "also check perfectness");
  verify_cmd->add_option("--threads", verify_threads, "worker threads");

  // domsets
  auto* domsets_cmd = app.add_subcommand("domsets", "efficient dominating sets D_i and D_i^j");
  int dom_n = 0;
  int dom_first = 1;
  int dom_last = 0;
  bool dom_partition = false;
  domsets_cmd->add_option("n", dom_n, "number of symbols")->required()->check(CLI::Range(3, 12));
  domsets_cmd->add_option("--first", dom_first, "first element i of D_i");
  domsets_cmd->add_option("--last", dom_last, "optional last element j of D_i^j");
  domsets_cmd->add_flag("--partition", dom_partition, "check that the D_i^j partition Sym_n");

  // quotient
  auto* quotient_cmd = app.add_subcommand("quotient", "the quotient graph and its coloring");
  int quotient_n = 0;
  std::string quotient_dimacs;
  quotient_cmd->add_option("n", quotient_n, "number of symbols")->required()->check(CLI::Range(3, 1000));
  quotient_cmd->add_option("--dimacs", quotient_dimacs, "write the quotient graph in DIMACS format");

  // exact-chi
  auto* chi_cmd = app.add_subcommand("exact-chi", "exact chromatic number by complete search");
  int chi_n = 0;
  double chi_timeout = 600.0;
  std::uint64_t chi_max_nodes = UINT64_MAX;
  chi_cmd->add_option("n", chi_n, "number of symbols")->required()->check(CLI::Range(1, 7));
  chi_cmd->add_option("--timeout", chi_timeout, "time budget in seconds (default 600)");
  chi_cmd->add_option("--max-nodes", chi_max_nodes, "node budget");

  // search
  auto* search_cmd = app.add_subcommand("search", "decide k-colorability");
  int search_n = 0;
  int search_k = 0;
  std::string search_mode = "auto";
  std::uint32_t search_seed = 1;
  double search_timeout = 600.0;
  std::uint64_t search_max_nodes = UINT64_MAX;
  int search_threads = 0;
  std::string search_out;
  search_cmd->add_option("n", search_n, "number of symbols")->required()->check(CLI::Range(1, 10));
  search_cmd->add_option("-k,--colors", search_k, "number of colors")->required()->check(CLI::Range(1, 255));
  search_cmd->add_option("--mode", search_mode, "auto, complete or heuristic");
  search_cmd->add_option("--seed", search_seed, "seed for the heuristic engine");
  search_cmd->add_option("--timeout", search_timeout, "time budget in seconds (default 600)");
  search_cmd->add_option("--max-nodes", search_max_nodes, "node budget");
  search_cmd->add_option("--threads", search_threads, "heuristic portfolio width");
  std::string search_initial;
  search_cmd->add_option("--initial", search_initial,
                         "coloring file seeding the heuristic search");
  search_cmd->add_option("--out", search_out, "write the coloring here when one is found");

  // export-dimacs
  auto* export_cmd = app.add_subcommand("export-dimacs", "emit the pancake graph in DIMACS format");
  int export_n = 0;
  std::string export_out;
  export_cmd->add_option("n", export_n, "number of symbols")->required()->check(CLI::Range(1, 12));
  export_cmd->add_option("--out", export_out, "output file (default: standard output)");

  // Accept --json both before and after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->add_flag("--json", as_json, "emit a machine-readable run report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds_cmd->parsed()) return run_bounds(bounds_n, as_json);
    if (color_cmd->parsed()) {
      return run_color(color_n, color_method, color_blocks, color_out, color_flags,
                       resolve_threads(color_threads), as_json);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_n, verify_file, verify_method, verify_blocks, verify_flags,
                        resolve_threads(verify_threads), as_json);
    }
    if (domsets_cmd->parsed()) return run_domsets(dom_n, dom_first, dom_last, dom_partition, as_json);
    if (quotient_cmd->parsed()) return run_quotient(quotient_n, quotient_dimacs, as_json);
    if (chi_cmd->parsed()) return run_exact_chi(chi_n, chi_timeout, chi_max_nodes, as_json);
    if (search_cmd->parsed()) {
      return run_search(search_n, search_k, search_mode, search_seed, search_timeout,
                        search_max_nodes, resolve_threads(search_threads), search_initial,
                        search_out, as_json);
    }
    if (export_cmd->parsed()) return run_export_dimacs(export_n, export_out, as_json);
  } catch (const std::exception& e) {
    // Bad arguments, malformed files and capacity limits all count as usage
    // errors for the caller.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
