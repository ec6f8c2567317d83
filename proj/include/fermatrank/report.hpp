#pragma once

// Run configuration and report emission for the CLI and the C API.  A
// RunConfig names one command plus its parameters; run() executes it and
// returns the fully serialized report.  Output is byte-deterministic for
// a fixed config: JSON uses a fixed key order, exact values serialize as
// decimal strings ("num/den" for rationals, never floats), and float
// "_approx" companions are included in JSON only, for plotting.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermatrank/modchar.hpp"
#include "fermatrank/numeric.hpp"

namespace fermatrank {

enum class Command { orbits, irreps, tower, bound, filtration_bound, table };
enum class OutputFormat { json, csv, plain };

std::string command_name(Command command);
Command command_from_name(const std::string& name);
std::string format_name(OutputFormat format);
OutputFormat format_from_name(const std::string& name);

struct ActionConfig {
  std::string kind = "full-units";  // full-units | trivial | scalar | matrix
  std::vector<Int> scalar_generators;
  std::vector<Mat2> matrix_generators;
};

struct RunConfig {
  Command command = Command::bound;
  Int p = 3;
  unsigned n = 1;  // level for orbits/irreps/bound, n_max for tower/table
  Int k_degree = 1;
  Rat c = 0;
  Int h1_base = 1;
  bool mu_zero = false;
  bool h1_triviality = false;
  bool linearly_disjoint = true;
  std::map<unsigned, Int> degree_overrides;  // level -> [F_i:Q]
  ActionConfig action;
  std::vector<std::int64_t> ranks;  // filtration-bound
  std::int64_t h1 = 0;              // filtration-bound
  std::uint64_t start_index = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  OutputFormat format = OutputFormat::json;
  std::string output = "-";  // "-" = standard output
};

// The "config" object of the JSON report; parsing it back yields an
// equal RunConfig.
nlohmann::ordered_json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& json);
RunConfig config_from_json_text(const std::string& text);

// Executes the command and returns the serialized report (JSON, CSV, or
// plain text per config.format).  Failures throw Error; the caller maps
// ErrorCode::budget_exceeded to exit code 3 and everything else to 2.
std::string run(const RunConfig& config);

}  // namespace fermatrank
