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

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef PANCAKE_CLI_PATH
#error "PANCAKE_CLI_PATH must point at the pancake binary"
#endif
#ifndef PANCAKE_SCHEMA_DIR
#error "PANCAKE_SCHEMA_DIR must point at the schemas directory"
#endif

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / ("pancake-cli-test-" + stem);
}

// Runs the CLI with stdout captured to a file; stderr is left visible so
// failures are easy to diagnose in the test log.
CliResult run_cli(const std::string& args) {
  const auto capture = temp_file("stdout.txt");
  const std::string command =
      std::string(PANCAKE_CLI_PATH) + " " + args + " > " + capture.string();
  const int raw = std::system(command.c_str());
  CliResult result;
#ifdef _WIN32
  result.exit_code = raw;
#else
  result.exit_code = (raw >= 0 && (raw & 0x7f) == 0) ? ((raw >> 8) & 0xff) : -1;
#endif
  std::ifstream in(capture);
  std::ostringstream os;
  os << in.rdbuf();
  result.out = os.str();
  std::filesystem::remove(capture);
  return result;
}

json parse_json(const std::string& text) {
  CAPTURE(text);
  return json::parse(text);
}

// --- A small JSON Schema checker -------------------------------------------
//
// Covers exactly the keywords the committed schema uses: type, required,
// properties, additionalProperties, enum, minimum.  Unknown keywords are
// rejected so the schema cannot silently drift beyond what is checked here.

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "array") return value.is_array();
  if (type == "null") return value.is_null();
  return false;
}

void check_schema(const json& schema, const json& value, const std::string& where,
                  std::vector<std::string>& errors) {
  static const std::vector<std::string> known = {
      "$schema", "$id",         "title",      "description", "type",
      "required", "properties", "additionalProperties", "enum", "minimum"};
  for (const auto& [key, unused] : schema.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      errors.push_back(where + ": schema keyword '" + key + "' is outside the checked subset");
    }
  }

  if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value)) {
    errors.push_back(where + ": expected type " + schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const json& candidate : schema["enum"]) found = found || candidate == value;
    if (!found) errors.push_back(where + ": value " + value.dump() + " not in enum");
  }
  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(where + ": value " + value.dump() + " below minimum");
  }
  if (!value.is_object()) return;

  if (schema.contains("required")) {
    for (const json& name : schema["required"]) {
      if (!value.contains(name.get<std::string>())) {
        errors.push_back(where + ": missing required member '" + name.get<std::string>() + "'");
      }
    }
  }
  const json properties = schema.value("properties", json::object());
  for (const auto& [key, member] : value.items()) {
    if (properties.contains(key)) {
      check_schema(properties[key], member, where + "." + key, errors);
    } else if (schema.contains("additionalProperties")) {
      const json& extra = schema["additionalProperties"];
      if (extra.is_boolean() && !extra.get<bool>()) {
        errors.push_back(where + ": unexpected member '" + key + "'");
      } else if (extra.is_object()) {
        check_schema(extra, member, where + "." + key, errors);
      }
    }
  }
}

json load_schema() {
  const std::filesystem::path path =
      std::filesystem::path(PANCAKE_SCHEMA_DIR) / "run_report.schema.json";
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "schema file missing: ", path.string());
  return json::parse(in);
}

// Parses stdout as JSON and validates it against the committed schema.
json report_of(const std::string& args, int expected_exit) {
  CliResult r = run_cli(args);
  CAPTURE(args);
  CHECK(r.exit_code == expected_exit);
  const json report = parse_json(r.out);
  std::vector<std::string> errors;
  check_schema(load_schema(), report, "$", errors);
  for (const std::string& e : errors) FAIL_CHECK(e);
  return report;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("bounds 20 --json reports best upper bound 10") {
  const json report = report_of("bounds 20 --json", 0);
  CHECK(report["command"] == "bounds");
  CHECK(report["results"]["best_upper"] == 10);
  CHECK(report["results"]["lower"] == 4);
  int catlin = 0, piecewise = 0, subadditive = 0;
  for (const json& row : report["results"]["rows"]) {
    if (row["id"] == "catlin") catlin = row["value"];
    if (row["id"] == "piecewise") piecewise = row["value"];
    if (row["id"] == "subadditive") subadditive = row["value"];
  }
  CHECK(catlin == 14);
  CHECK(piecewise == 12);
  CHECK(subadditive == 10);
}

TEST_CASE("color 6 --method equitable-nm1 --verify is proper with 5 classes of 144") {
  const json report = report_of("color 6 --method equitable-nm1 --verify --json", 0);
  const json& verify = report["results"]["verify"];
  CHECK(verify["proper"] == true);
  CHECK(verify["class_sizes"].size() == 5);
  for (const json& size : verify["class_sizes"]) CHECK(size == 144);
  CHECK(verify["strongly_equitable"] == true);

  CliResult human = run_cli("color 6 --method equitable-nm1 --verify");
  CHECK(human.exit_code == 0);
  CHECK(human.out.find("proper: yes") != std::string::npos);
}

TEST_CASE("verify with a constant coloring file reports improper and exits 1") {
  const auto path = temp_file("constant.txt");
  {
    std::ofstream out(path);
    out << "pancake-coloring n=5 k=1\n";
    for (int rank = 0; rank < 120; ++rank) out << rank << " 1\n";
  }
  const json report = report_of("verify 5 " + path.string() + " --json", 1);
  CHECK(report["results"]["proper"] == false);
  CHECK(report["results"]["violations"] == 240);
  std::filesystem::remove(path);
}

TEST_CASE("round trip: color --out then verify exits 0 for built-in methods") {
  const std::vector<std::pair<std::string, int>> cases = {
      {"first-element", 4}, {"parity2", 3},       {"parity4", 5},
      {"equitable-nm1", 5}, {"equitable-nm1", 6},
  };
  for (const auto& [method, n] : cases) {
    CAPTURE(method);
    CAPTURE(n);
    const auto path = temp_file("roundtrip.txt");
    CHECK(run_cli("color " + std::to_string(n) + " --method " + method + " --out " +
                  path.string())
              .exit_code == 0);
    CHECK(run_cli("verify " + std::to_string(n) + " " + path.string()).exit_code == 0);
    std::filesystem::remove(path);
  }

  const auto path = temp_file("roundtrip-compose.txt");
  CHECK(run_cli("color 6 --method compose --blocks 4,2 --out " + path.string()).exit_code == 0);
  CHECK(run_cli("verify 6 " + path.string()).exit_code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("every subcommand emits a schema-valid JSON report") {
  report_of("bounds 9 --json", 0);
  report_of("color 5 --method parity4 --verify --json", 0);
  report_of("verify 5 --method first-element --json", 0);
  report_of("domsets 4 --first 2 --json", 0);
  report_of("domsets 4 --first 1 --last 3 --json", 0);
  report_of("domsets 4 --partition --json", 0);
  report_of("quotient 5 --json", 0);
  report_of("exact-chi 4 --json", 0);
  report_of("search 4 --colors 3 --mode complete --json", 0);
  const auto dimacs = temp_file("export.dimacs");
  report_of("export-dimacs 4 --out " + dimacs.string() + " --json", 0);
  std::filesystem::remove(dimacs);
}

TEST_CASE("timing fields are non-negative and version matches --version") {
  const json report = report_of("quotient 4 --json", 0);
  for (const auto& [key, value] : report["timing"].items()) {
    CAPTURE(key);
    CHECK(value.get<double>() >= 0.0);
  }
  CliResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  const std::string printed = version.out.substr(0, version.out.find('\n'));
  CHECK(report["version"] == printed);
}

TEST_CASE("usage errors exit 64 with help available at 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("bounds --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 64);               // missing subcommand
  CHECK(run_cli("frobnicate").exit_code == 64);     // unknown subcommand
  CHECK(run_cli("bounds").exit_code == 64);         // missing n
  CHECK(run_cli("bounds 1").exit_code == 64);       // below range
  CHECK(run_cli("color 6 --method no-such-method").exit_code == 64);
  CHECK(run_cli("verify 5 /no/such/file.txt").exit_code == 64);
  CHECK(run_cli("verify 5").exit_code == 64);       // neither file nor method
  CHECK(run_cli("color 6 --method compose").exit_code == 64);  // compose needs blocks
  CHECK(run_cli("color 6 --method compose --blocks 4,4").exit_code == 64);  // wrong sum
}

TEST_CASE("malformed coloring files are usage errors") {
  const auto path = temp_file("malformed.txt");
  {
    std::ofstream out(path);
    out << "not a coloring header\n";
  }
  CHECK(run_cli("verify 5 " + path.string()).exit_code == 64);
  {
    std::ofstream out(path);
    out << "pancake-coloring n=4 k=2\n0 1\n1 2\n";  // truncated body
  }
  CHECK(run_cli("verify 4 " + path.string()).exit_code == 64);
  {
    std::ofstream out(path);
    out << "pancake-coloring n=3 k=2\n";
    for (int rank = 0; rank < 6; ++rank) out << rank << " 1\n";
  }
  CHECK(run_cli("verify 4 " + path.string()).exit_code == 64);  // n mismatch
  std::filesystem::remove(path);
}

TEST_CASE("a proper --initial seed ends the heuristic search in zero moves") {
  const auto path = temp_file("seed.txt");
  CHECK(run_cli("color 5 --method parity4 --out " + path.string()).exit_code == 0);
  const json report =
      report_of("search 5 --colors 4 --mode heuristic --initial " + path.string() + " --json", 0);
  CHECK(report["results"]["status"] == "colored");
  CHECK(report["results"]["nodes"] == 0);
  CHECK(run_cli("search 4 --colors 3 --mode heuristic --initial " + path.string()).exit_code ==
        64);  // n mismatch
  std::filesystem::remove(path);
}

TEST_CASE("budget exhaustion exits 2") {
  CliResult search = run_cli("search 6 --colors 3 --mode complete --max-nodes 50");
  CHECK(search.exit_code == 2);
  CliResult chi = run_cli("exact-chi 6 --max-nodes 50 --json");
  CHECK(chi.exit_code == 2);
  const json report = parse_json(chi.out);
  CHECK(report["results"]["decided"] == false);
  CHECK(report["results"]["lower"].get<int>() >= 3);
}

TEST_CASE("export-dimacs streams a well-formed graph") {
  CliResult r = run_cli("export-dimacs 4");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "p edge 24 36");
  int edges = 0;
  while (std::getline(in, line)) {
    CAPTURE(line);
    int u = 0, v = 0;
    REQUIRE(std::sscanf(line.c_str(), "e %d %d", &u, &v) == 2);
    CHECK(u >= 1);
    CHECK(v <= 24);
    CHECK(u < v);
    ++edges;
  }
  CHECK(edges == 36);
}

TEST_SUITE_END();
