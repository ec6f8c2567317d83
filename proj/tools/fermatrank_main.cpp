// Command-line front end.  All work happens behind the C API in
// libfermatrank; this file only translates flags into a config JSON,
// hands it to frk_run_json, and writes the returned bytes.
//
// Exit codes: 0 success, 2 invalid input or missing hypothesis flag,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermatrank.h"

namespace {

using nlohmann::ordered_json;

int exit_code_for(frk_status status) {
  if (status == FRK_OK) return 0;
  return status == FRK_ERR_BUDGET ? 3 : 2;
}

int run_config(const std::string& config_text, const std::string& output) {
  char* report = nullptr;
  frk_status status = frk_run_json(config_text.c_str(), &report);
  if (status != FRK_OK) {
    std::cerr << "fermatrank: " << frk_last_error() << '\n';
    return exit_code_for(status);
  }
  int code = 0;
  if (output == "-") {
    std::cout << report;
  } else {
    std::ofstream file(output, std::ios::binary);
    file << report;
    if (!file.good()) {
      std::cerr << "fermatrank: cannot write \"" << output << "\"\n";
      code = 2;
    }
  }
  frk_string_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank bounds for Jacobians in pro-p towers of Fermat curves"};
  app.set_version_flag("--version", "fermatrank 0.1.0");
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "run a JSON config file instead of a subcommand");

  std::string p = "3";
  unsigned n = 1;
  std::string k_degree = "1";
  std::string c_value = "0";
  std::int64_t h1_base = 1;
  bool mu_zero = false;
  bool h1_triviality = false;
  bool linearly_disjoint = true;
  std::vector<std::string> overrides;
  std::string action_kind = "full-units";
  std::vector<std::string> generators;
  std::uint64_t budget = 1000000;
  std::vector<std::int64_t> ranks;
  std::int64_t h1 = 0;
  std::uint64_t start_index = 0;
  std::string format = "json";
  std::string output = "-";

  auto add_output_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format (json, csv, plain)")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--output", output, "output path, - for standard output");
  };
  auto add_degree_opts = [&](CLI::App* cmd) {
    cmd->add_option("--K-degree", k_degree, "degree [K:Q] of the base field");
    cmd->add_flag("--linearly-disjoint,!--no-linearly-disjoint",
                  linearly_disjoint,
                  "assume K is linearly disjoint from the cyclotomic tower");
    cmd->add_option("--degree-override", overrides,
                    "level=degree pair replacing a computed [F_i:Q]; repeatable");
  };
  auto add_action_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "odd prime p");
    cmd->add_option("--n", n, "level n; characters live on (Z/p^n)^2");
    cmd->add_option("--action", action_kind,
                    "full-units, trivial, scalar, or matrix")
        ->check(CLI::IsMember({"full-units", "trivial", "scalar", "matrix"}));
    cmd->add_option("--generators", generators,
                    "scalar units, or matrix entries a,b,c,d per generator")
        ->delimiter(',');
    cmd->add_option("--budget", budget, "enumeration budget");
    add_output_opts(cmd);
  };

  CLI::App* orbits =
      app.add_subcommand("orbits", "orbit decomposition of the characters");
  add_action_opts(orbits);

  CLI::App* irreps = app.add_subcommand(
      "irreps", "irreducible constituents of the induced representations");
  add_action_opts(irreps);

  CLI::App* tower =
      app.add_subcommand("tower", "genus, new part, and degree ladder");
  tower->add_option("--p", p, "odd prime p");
  tower->add_option("--n-max", n, "largest level of the ladder");
  add_degree_opts(tower);
  add_output_opts(tower);

  CLI::App* bound =
      app.add_subcommand("bound", "rank bounds at a single level");
  bound->add_option("--p", p, "odd prime p");
  bound->add_option("--n", n, "level of the tower");
  bound->add_option("--C", c_value, "error constant C, an integer or num/den");
  bound->add_option("--h1-base", h1_base, "H^1 dimension for the 2*h1*dim bound");
  bound->add_flag("--mu-zero", mu_zero, "assert the Iwasawa mu = 0 hypothesis");
  bound->add_flag("--h1-triviality", h1_triviality,
                  "assert trivial Galois action on the relevant H^1");
  add_degree_opts(bound);
  add_output_opts(bound);

  CLI::App* table =
      app.add_subcommand("table", "rank bounds for every level up to n_max");
  table->add_option("--p", p, "odd prime p");
  table->add_option("--n-max", n, "largest level of the table");
  table->add_option("--C", c_value, "error constant C, an integer or num/den");
  table->add_option("--h1-base", h1_base, "H^1 dimension for the 2*h1*dim bound");
  table->add_flag("--mu-zero", mu_zero, "assert the Iwasawa mu = 0 hypothesis");
  table->add_flag("--h1-triviality", h1_triviality,
                  "assert trivial Galois action on the relevant H^1");
  add_degree_opts(table);
  add_output_opts(table);

  CLI::App* filtration = app.add_subcommand(
      "filtration-bound", "h1-weighted rank bound from a filtration");
  filtration->add_option("--ranks", ranks, "subquotient ranks, comma separated")
      ->required()
      ->delimiter(',');
  filtration->add_option("--h1", h1, "H^1 dimension multiplier")->required();
  filtration->add_option("--start-index", start_index,
                         "first filtration index counted");
  add_output_opts(filtration);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!config_path.empty()) {
    if (!app.get_subcommands().empty()) {
      std::cerr << "fermatrank: --config cannot be combined with a subcommand\n";
      return 2;
    }
    std::ifstream file(config_path, std::ios::binary);
    if (!file) {
      std::cerr << "fermatrank: cannot read \"" << config_path << "\"\n";
      return 2;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    std::string text = buffer.str();
    std::string out_path = "-";
    nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_object() && parsed.contains("output") &&
        parsed["output"].is_string())
      out_path = parsed["output"].get<std::string>();
    return run_config(text, out_path);
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  ordered_json config;
  auto put_overrides = [&] {
    if (overrides.empty()) return true;
    ordered_json object;
    for (const std::string& entry : overrides) {
      std::size_t eq = entry.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
        std::cerr << "fermatrank: --degree-override expects level=degree, got \""
                  << entry << "\"\n";
        return false;
      }
      object[entry.substr(0, eq)] = entry.substr(eq + 1);
    }
    config["degree_overrides"] = object;
    return true;
  };

  if (app.got_subcommand(orbits) || app.got_subcommand(irreps)) {
    config["command"] = app.got_subcommand(orbits) ? "orbits" : "irreps";
    config["p"] = p;
    config["n"] = n;
    ordered_json action;
    action["kind"] = action_kind;
    if (action_kind == "scalar") {
      action["generators"] = generators;
    } else if (action_kind == "matrix") {
      if (generators.empty() || generators.size() % 4 != 0) {
        std::cerr << "fermatrank: matrix generators need entries in groups of "
                     "four (a,b,c,d)\n";
        return 2;
      }
      ordered_json mats = ordered_json::array();
      for (std::size_t i = 0; i < generators.size(); i += 4)
        mats.push_back({generators[i], generators[i + 1], generators[i + 2],
                        generators[i + 3]});
      action["generators"] = mats;
    } else if (!generators.empty()) {
      std::cerr << "fermatrank: --generators requires --action scalar or matrix\n";
      return 2;
    }
    config["action"] = action;
    config["budget"] = budget;
  } else if (app.got_subcommand(tower)) {
    config["command"] = "tower";
    config["p"] = p;
    config["n_max"] = n;
    config["K_degree"] = k_degree;
    config["linearly_disjoint"] = linearly_disjoint;
    if (!put_overrides()) return 2;
  } else if (app.got_subcommand(bound) || app.got_subcommand(table)) {
    config["command"] = app.got_subcommand(bound) ? "bound" : "table";
    config["p"] = p;
    config[app.got_subcommand(bound) ? "n" : "n_max"] = n;
    config["K_degree"] = k_degree;
    config["C"] = c_value;
    config["h1_base"] = h1_base;
    config["mu_zero"] = mu_zero;
    config["h1_triviality"] = h1_triviality;
    config["linearly_disjoint"] = linearly_disjoint;
    if (!put_overrides()) return 2;
  } else {
    config["command"] = "filtration-bound";
    config["ranks"] = ranks;
    config["h1"] = h1;
    config["start_index"] = start_index;
  }
  config["format"] = format;
  config["output"] = output;
  return run_config(config.dump(), output);
}
