#include "fermatrank/report.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "fermatrank/bounds.hpp"
#include "fermatrank/errors.hpp"
#include "fermatrank/semidirect.hpp"
#include "fermatrank/tower.hpp"

namespace fermatrank {

namespace {

using nlohmann::ordered_json;

const char* kCommandNames[] = {"orbits",          "irreps", "tower",
                               "bound",           "filtration-bound",
                               "table"};
const char* kFormatNames[] = {"json", "csv", "plain"};

std::int64_t to_int64(const Int& value, const char* name) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max())
    fail(ErrorCode::invalid_argument,
         std::string(name) + " does not fit in a 64-bit integer");
  return value.convert_to<std::int64_t>();
}

Int int_from_json(const nlohmann::json& value, const char* name) {
  if (value.is_number_integer())
    return Int(value.get<std::int64_t>());
  if (value.is_string())
    return int_from_string(value.get<std::string>());
  fail(ErrorCode::invalid_argument,
       std::string(name) + " must be an integer or a decimal string");
}

Rat rat_from_json(const nlohmann::json& value, const char* name) {
  if (value.is_number_integer())
    return Rat(value.get<std::int64_t>());
  if (value.is_string())
    return rat_from_string(value.get<std::string>());
  fail(ErrorCode::invalid_argument,
       std::string(name) + " must be an integer or a \"num/den\" string");
}

std::uint64_t uint_from_json(const nlohmann::json& value, const char* name) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
    fail(ErrorCode::invalid_argument,
         std::string(name) + " must be a non-negative integer");
  return value.get<std::uint64_t>();
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

GaloisAction make_action(const RunConfig& config) {
  PrimePower level(config.p, config.n);
  const std::string& kind = config.action.kind;
  if (kind == "full-units") return GaloisAction::full_units(level, config.budget);
  if (kind == "trivial") return GaloisAction::trivial(level);
  if (kind == "scalar")
    return GaloisAction::scalar(level, config.action.scalar_generators,
                                config.budget);
  if (kind == "matrix")
    return GaloisAction::matrix(level, config.action.matrix_generators,
                                config.budget);
  fail(ErrorCode::invalid_argument, "unknown action kind \"" + kind + "\"");
}

FieldDegrees make_degrees(const RunConfig& config) {
  return field_degrees(config.p, config.n, config.k_degree,
                       config.linearly_disjoint, config.degree_overrides);
}

void require_hypotheses(const RunConfig& config, const char* command) {
  if (!config.mu_zero)
    fail(ErrorCode::mu_hypothesis_missing,
         std::string(command) +
             " requires --mu-zero: the Iwasawa mu = 0 hypothesis is an input, "
             "not a computed fact");
  if (!config.h1_triviality)
    fail(ErrorCode::hypothesis_missing,
         std::string(command) +
             " requires --h1-triviality: the bound assumes the Galois action "
             "on the relevant H^1 factors through the tower");
}

// ---- report assembly ------------------------------------------------------

struct Rendered {
  ordered_json results;          // json format
  std::string csv;               // csv format
  std::string plain;             // plain format
  std::vector<std::string> warnings;
};

Rendered render_orbits(const RunConfig& config) {
  GaloisAction action = make_action(config);
  std::vector<Orbit> orbits = all_orbits(action, config.budget);
  PrimePower level = action.level();
  Int char_count = level.value() * level.value();

  Rendered out;
  out.results["p"] = to_int64(config.p, "p");
  out.results["n"] = config.n;
  out.results["p_n"] = int_to_string(level.value());
  out.results["group_order"] = action.group_order();
  out.results["character_count"] = int_to_string(char_count);
  if (config.n >= 1)
    out.results["primitive_character_count"] =
        int_to_string(primitive_character_count(level));
  out.results["orbit_count"] = orbits.size();
  ordered_json rows = ordered_json::array();
  for (const Orbit& orbit : orbits) {
    ordered_json row;
    row["rep_a"] = int_to_string(orbit.representative.a);
    row["rep_b"] = int_to_string(orbit.representative.b);
    row["size"] = orbit.size;
    row["stabilizer_order"] = orbit.stabilizer_order;
    Int order = char_exact_order(orbit.representative);
    row["char_order"] = int_to_string(order);
    if (config.n >= 1) row["primitive"] = (order == level.value());
    rows.push_back(row);
  }
  out.results["orbits"] = rows;

  out.csv = csv_line({"rep_a", "rep_b", "size", "stabilizer_order", "char_order"});
  for (const Orbit& orbit : orbits)
    out.csv += csv_line({int_to_string(orbit.representative.a),
                         int_to_string(orbit.representative.b),
                         std::to_string(orbit.size),
                         std::to_string(orbit.stabilizer_order),
                         int_to_string(char_exact_order(orbit.representative))});

  std::ostringstream plain;
  plain << "p^n = " << level.value() << ", |H| = " << action.group_order()
        << ", characters = " << char_count << ", orbits = " << orbits.size()
        << "\n";
  for (const Orbit& orbit : orbits)
    plain << "rep=(" << orbit.representative.a << "," << orbit.representative.b
          << ") size=" << orbit.size << " stabilizer=" << orbit.stabilizer_order
          << " order=" << char_exact_order(orbit.representative) << "\n";
  out.plain = plain.str();
  return out;
}

Rendered render_irreps(const RunConfig& config) {
  GaloisAction action = make_action(config);
  std::vector<IrrepDatum> irreps = enumerate_irreps(action, config.budget);
  PrimePower level = action.level();

  Rendered out;
  out.results["p"] = to_int64(config.p, "p");
  out.results["n"] = config.n;
  out.results["p_n"] = int_to_string(level.value());
  out.results["group_order"] = action.group_order();
  out.results["irrep_count"] = irreps.size();
  Int sum = dim_squared_sum(irreps);
  out.results["dim_squared_sum"] = int_to_string(sum);
  out.results["dim_squared_identity"] =
      (sum == level.value() * level.value() * Int(action.group_order()));
  ordered_json rows = ordered_json::array();
  for (const IrrepDatum& irrep : irreps) {
    ordered_json row;
    row["orbit_rep_a"] = int_to_string(irrep.orbit.representative.a);
    row["orbit_rep_b"] = int_to_string(irrep.orbit.representative.b);
    row["orbit_size"] = irrep.orbit.size;
    row["psi_index"] = irrep.psi_index;
    row["psi_trivial"] = irrep.psi_is_trivial;
    row["dim"] = irrep.dim;
    row["fixed_dim"] = irrep.fixed_dim;
    row["fixed_dim_bound"] = rat_to_string(fixed_dim_bound(irrep));
    rows.push_back(row);
  }
  out.results["irreps"] = rows;

  out.csv = csv_line({"orbit_rep_a", "orbit_rep_b", "orbit_size", "psi_index",
                      "psi_trivial", "dim", "fixed_dim"});
  for (const IrrepDatum& irrep : irreps)
    out.csv += csv_line({int_to_string(irrep.orbit.representative.a),
                         int_to_string(irrep.orbit.representative.b),
                         std::to_string(irrep.orbit.size),
                         std::to_string(irrep.psi_index),
                         bool_str(irrep.psi_is_trivial),
                         std::to_string(irrep.dim),
                         std::to_string(irrep.fixed_dim)});

  std::ostringstream plain;
  plain << "p^n = " << level.value() << ", |H| = " << action.group_order()
        << ", irreps = " << irreps.size() << ", sum dim^2 = " << sum << "\n";
  for (const IrrepDatum& irrep : irreps)
    plain << "orbit=(" << irrep.orbit.representative.a << ","
          << irrep.orbit.representative.b << ") psi=" << irrep.psi_index
          << " dim=" << irrep.dim << " fixed=" << irrep.fixed_dim << "\n";
  out.plain = plain.str();
  return out;
}

Rendered render_tower(const RunConfig& config) {
  FieldDegrees degrees = make_degrees(config);
  TowerTable table = build_tower_table(config.p, config.n, degrees);

  Rendered out;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    const TowerLevel& level = table.levels[i];
    Rat s_n = table.partial_sums[i];
    Rat ratio = s_n / Rat(level.degree);
    ordered_json row;
    row["n"] = level.n;
    row["p_n"] = int_to_string(level.degree);
    row["genus"] = int_to_string(level.genus);
    row["dim_J"] = int_to_string(level.dim_jacobian);
    row["dim_Jprime"] = int_to_string(level.dim_new_part);
    row["Fn_degree_over_Q"] = int_to_string(degrees.f_over_q(level.n));
    row["Fn_degree_over_K"] = int_to_string(degrees.f_over_k(level.n));
    row["S_n"] = rat_to_string(s_n);
    row["S_n_approx"] = rat_to_double(s_n);
    row["S_over_pn"] = rat_to_string(ratio);
    row["S_over_pn_approx"] = rat_to_double(ratio);
    rows.push_back(row);
  }
  out.results["levels"] = rows;

  out.csv = csv_line({"n", "p_n", "genus", "dim_J", "dim_Jprime",
                      "Fn_degree_over_Q", "Fn_degree_over_K", "S_n",
                      "S_over_pn"});
  std::ostringstream plain;
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    const TowerLevel& level = table.levels[i];
    Rat s_n = table.partial_sums[i];
    Rat ratio = s_n / Rat(level.degree);
    out.csv += csv_line({std::to_string(level.n), int_to_string(level.degree),
                         int_to_string(level.genus),
                         int_to_string(level.dim_jacobian),
                         int_to_string(level.dim_new_part),
                         int_to_string(degrees.f_over_q(level.n)),
                         int_to_string(degrees.f_over_k(level.n)),
                         rat_to_string(s_n), rat_to_string(ratio)});
    plain << "n=" << level.n << " p^n=" << level.degree
          << " genus=" << level.genus << " dim_J=" << level.dim_jacobian
          << " dim_J'=" << level.dim_new_part
          << " [Fn:Q]=" << degrees.f_over_q(level.n)
          << " S_n=" << rat_to_string(s_n) << "\n";
  }
  out.plain = plain.str();
  return out;
}

const char* kConstantsWarning =
    "C and h1_base are user-supplied constants; the reported bounds are "
    "illustrative unless those inputs are calibrated externally";
const char* kAsymptoticWarning =
    "asymptotic bounds use C' = C * max(S_n / p^n) over the computed levels; "
    "treat them as heuristic";

Rendered render_bound(const RunConfig& config) {
  if (config.n < 1)
    fail(ErrorCode::invalid_argument, "bound requires n >= 1");
  require_hypotheses(config, "bound");
  FieldDegrees degrees = make_degrees(config);
  TowerLevel level = tower_level(config.p, config.n);
  Rat s_n = rank_sum(config.p, config.n, degrees);
  Int theorem_main =
      theorem_main_bound(level.dim_jacobian, config.h1_base, true);
  Rat prop_fnrank = prop_fnrank_bound(level.dim_jacobian,
                                      degrees.f_over_q(config.n), config.c,
                                      true);
  Rat exact = fermat_rank_bound_exact(config.p, config.n, degrees, config.c,
                                      true);
  AsymptoticBound asym =
      fermat_rank_bound_asymptotic(config.p, config.n, degrees, config.c);
  Rat asym_bound = asym.per_level.at(config.n);
  Rat dim_j(level.dim_jacobian);

  Rendered out;
  out.results["p_n"] = int_to_string(level.degree);
  out.results["genus"] = int_to_string(level.genus);
  out.results["dim_J"] = int_to_string(level.dim_jacobian);
  out.results["Fn_degree_over_Q"] = int_to_string(degrees.f_over_q(config.n));
  out.results["S_n"] = rat_to_string(s_n);
  out.results["S_n_approx"] = rat_to_double(s_n);
  out.results["theorem_main_bound"] = int_to_string(theorem_main);
  out.results["prop_fnrank_bound"] = rat_to_string(prop_fnrank);
  out.results["prop_fnrank_bound_approx"] = rat_to_double(prop_fnrank);
  out.results["exact_bound"] = rat_to_string(exact);
  out.results["exact_bound_approx"] = rat_to_double(exact);
  out.results["asymptotic_C_prime"] = rat_to_string(asym.c_prime);
  out.results["asymptotic_C_prime_approx"] = rat_to_double(asym.c_prime);
  out.results["asymptotic_bound"] = rat_to_string(asym_bound);
  out.results["asymptotic_bound_approx"] = rat_to_double(asym_bound);
  out.results["chabauty_exact"] = chabauty_check(exact, level.dim_jacobian);
  out.results["chabauty_asymptotic"] =
      chabauty_check(asym_bound, level.dim_jacobian);

  out.csv = csv_line({"kind", "value", "chabauty"});
  out.csv += csv_line({bound_kind_name(BoundKind::theorem_main),
                       int_to_string(theorem_main),
                       bool_str(Rat(theorem_main) < dim_j)});
  out.csv += csv_line({bound_kind_name(BoundKind::prop_fnrank),
                       rat_to_string(prop_fnrank),
                       bool_str(prop_fnrank < dim_j)});
  out.csv += csv_line({bound_kind_name(BoundKind::fermat_exact),
                       rat_to_string(exact), bool_str(exact < dim_j)});
  out.csv += csv_line({bound_kind_name(BoundKind::fermat_asymptotic),
                       rat_to_string(asym_bound),
                       bool_str(asym_bound < dim_j)});

  std::ostringstream plain;
  plain << "p = " << config.p << ", n = " << config.n
        << ", p^n = " << level.degree << "\n"
        << "dim J_n = " << level.dim_jacobian << "\n"
        << "[F_n:Q] = " << degrees.f_over_q(config.n) << "\n"
        << "S_n = " << rat_to_string(s_n) << "\n"
        << "theorem-main bound = " << theorem_main << "\n"
        << "prop-fnrank bound = " << rat_to_string(prop_fnrank) << "\n"
        << "fermat-exact bound = " << rat_to_string(exact) << "\n"
        << "fermat-asymptotic bound = " << rat_to_string(asym_bound)
        << " (C' = " << rat_to_string(asym.c_prime) << ")\n"
        << "chabauty (exact) = "
        << bool_str(chabauty_check(exact, level.dim_jacobian)) << "\n";
  out.plain = plain.str();
  out.warnings = {kConstantsWarning, kAsymptoticWarning};
  return out;
}

Rendered render_table(const RunConfig& config) {
  if (config.n < 1)
    fail(ErrorCode::invalid_argument, "table requires n_max >= 1");
  require_hypotheses(config, "table");
  FieldDegrees degrees = make_degrees(config);
  BoundReport report = assemble_bound_report(config.p, config.n, degrees,
                                             config.c, config.h1_base, true,
                                             true);

  Rendered out;
  out.results["asymptotic_C_prime"] = rat_to_string(report.c_prime);
  out.results["asymptotic_C_prime_approx"] = rat_to_double(report.c_prime);
  ordered_json rows = ordered_json::array();
  out.csv = csv_line({"n", "p_n", "genus", "dim_Jprime", "Fn_degree_over_Q",
                      "S_n", "S_over_pn", "exact_bound", "asymptotic_bound"});
  std::ostringstream plain;
  for (const LevelBound& bound : report.levels) {
    TowerLevel level = tower_level(config.p, bound.n);
    Rat ratio = bound.s_n / Rat(bound.p_n);
    ordered_json row;
    row["n"] = bound.n;
    row["p_n"] = int_to_string(bound.p_n);
    row["genus"] = int_to_string(level.genus);
    row["dim_J"] = int_to_string(bound.dim_j);
    row["dim_Jprime"] = int_to_string(level.dim_new_part);
    row["Fn_degree_over_Q"] = int_to_string(bound.fn_degree_over_q);
    row["S_n"] = rat_to_string(bound.s_n);
    row["S_n_approx"] = rat_to_double(bound.s_n);
    row["S_over_pn"] = rat_to_string(ratio);
    row["S_over_pn_approx"] = rat_to_double(ratio);
    row["exact_bound"] = rat_to_string(bound.exact_bound);
    row["exact_bound_approx"] = rat_to_double(bound.exact_bound);
    row["asymptotic_bound"] = rat_to_string(bound.asymptotic_bound);
    row["asymptotic_bound_approx"] = rat_to_double(bound.asymptotic_bound);
    row["chabauty_exact"] = bound.chabauty_exact;
    rows.push_back(row);
    out.csv += csv_line({std::to_string(bound.n), int_to_string(bound.p_n),
                         int_to_string(level.genus),
                         int_to_string(level.dim_new_part),
                         int_to_string(bound.fn_degree_over_q),
                         rat_to_string(bound.s_n), rat_to_string(ratio),
                         rat_to_string(bound.exact_bound),
                         rat_to_string(bound.asymptotic_bound)});
    plain << "n=" << bound.n << " p^n=" << bound.p_n
          << " dim_J=" << bound.dim_j
          << " exact=" << rat_to_string(bound.exact_bound)
          << " asymptotic=" << rat_to_string(bound.asymptotic_bound)
          << " chabauty=" << bool_str(bound.chabauty_exact) << "\n";
  }
  out.results["levels"] = rows;
  plain << "C' = " << rat_to_string(report.c_prime) << "\n";
  out.plain = plain.str();
  out.warnings = {kConstantsWarning, kAsymptoticWarning};
  return out;
}

Rendered render_filtration_bound(const RunConfig& config) {
  FiltrationData filtration;
  for (std::int64_t r : config.ranks) filtration.ranks.push_back(Int(r));
  Int bound =
      filtration_h1_bound(filtration, Int(config.h1), config.start_index);
  Int total = filtration.total_dim();
  Int tail = 0;
  for (std::size_t i = config.start_index; i < filtration.ranks.size(); ++i)
    tail += filtration.ranks[i];

  Rendered out;
  out.results["total_rank"] = int_to_string(total);
  out.results["tail_rank"] = int_to_string(tail);
  out.results["bound"] = int_to_string(bound);

  out.csv = csv_line({"total_rank", "tail_rank", "bound"});
  out.csv += csv_line({int_to_string(total), int_to_string(tail),
                       int_to_string(bound)});
  out.plain = "bound = " + int_to_string(bound) + "\n";
  return out;
}

}  // namespace

std::string command_name(Command command) {
  return kCommandNames[static_cast<int>(command)];
}

Command command_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == kCommandNames[i]) return static_cast<Command>(i);
  fail(ErrorCode::invalid_argument, "unknown command \"" + name + "\"");
}

std::string format_name(OutputFormat format) {
  return kFormatNames[static_cast<int>(format)];
}

OutputFormat format_from_name(const std::string& name) {
  for (int i = 0; i < 3; ++i)
    if (name == kFormatNames[i]) return static_cast<OutputFormat>(i);
  fail(ErrorCode::invalid_argument, "unknown output format \"" + name + "\"");
}

nlohmann::ordered_json config_to_json(const RunConfig& config) {
  ordered_json j;
  j["command"] = command_name(config.command);
  switch (config.command) {
    case Command::orbits:
    case Command::irreps: {
      j["p"] = to_int64(config.p, "p");
      j["n"] = config.n;
      ordered_json action;
      action["kind"] = config.action.kind;
      if (config.action.kind == "scalar") {
        ordered_json gens = ordered_json::array();
        for (const Int& g : config.action.scalar_generators)
          gens.push_back(int_to_string(g));
        action["generators"] = gens;
      } else if (config.action.kind == "matrix") {
        ordered_json gens = ordered_json::array();
        for (const Mat2& m : config.action.matrix_generators)
          gens.push_back({int_to_string(m.a), int_to_string(m.b),
                          int_to_string(m.c), int_to_string(m.d)});
        action["generators"] = gens;
      }
      j["action"] = action;
      j["budget"] = config.budget;
      break;
    }
    case Command::tower:
      j["p"] = to_int64(config.p, "p");
      j["n_max"] = config.n;
      j["K_degree"] = to_int64(config.k_degree, "K_degree");
      j["linearly_disjoint"] = config.linearly_disjoint;
      break;
    case Command::bound:
    case Command::table:
      j["p"] = to_int64(config.p, "p");
      j[config.command == Command::bound ? "n" : "n_max"] = config.n;
      j["K_degree"] = to_int64(config.k_degree, "K_degree");
      j["C"] = rat_to_string(config.c);
      j["h1_base"] = to_int64(config.h1_base, "h1_base");
      j["mu_zero"] = config.mu_zero;
      j["h1_triviality"] = config.h1_triviality;
      j["linearly_disjoint"] = config.linearly_disjoint;
      break;
    case Command::filtration_bound: {
      ordered_json ranks = ordered_json::array();
      for (std::int64_t r : config.ranks) ranks.push_back(r);
      j["ranks"] = ranks;
      j["h1"] = config.h1;
      j["start_index"] = config.start_index;
      break;
    }
  }
  if (!config.degree_overrides.empty() &&
      (config.command == Command::tower || config.command == Command::bound ||
       config.command == Command::table)) {
    ordered_json overrides;
    for (const auto& [level, degree] : config.degree_overrides)
      overrides[std::to_string(level)] = int_to_string(degree);
    j["degree_overrides"] = overrides;
  }
  j["format"] = format_name(config.format);
  j["output"] = config.output;
  return j;
}

RunConfig config_from_json(const nlohmann::json& json) {
  if (!json.is_object())
    fail(ErrorCode::invalid_argument, "config must be a JSON object");
  if (!json.contains("command"))
    fail(ErrorCode::invalid_argument, "config is missing \"command\"");
  RunConfig config;
  config.command = command_from_name(json.at("command").get<std::string>());

  std::vector<std::string> allowed = {"command", "format", "output"};
  switch (config.command) {
    case Command::orbits:
    case Command::irreps:
      allowed.insert(allowed.end(), {"p", "n", "action", "budget"});
      break;
    case Command::tower:
      allowed.insert(allowed.end(), {"p", "n_max", "K_degree",
                                     "linearly_disjoint", "degree_overrides"});
      break;
    case Command::bound:
      allowed.insert(allowed.end(),
                     {"p", "n", "K_degree", "C", "h1_base", "mu_zero",
                      "h1_triviality", "linearly_disjoint", "degree_overrides"});
      break;
    case Command::table:
      allowed.insert(allowed.end(),
                     {"p", "n_max", "K_degree", "C", "h1_base", "mu_zero",
                      "h1_triviality", "linearly_disjoint", "degree_overrides"});
      break;
    case Command::filtration_bound:
      allowed.insert(allowed.end(), {"ranks", "h1", "start_index"});
      break;
  }
  for (const auto& item : json.items()) {
    bool known = false;
    for (const std::string& key : allowed)
      if (item.key() == key) known = true;
    if (!known)
      fail(ErrorCode::invalid_argument,
           "config key \"" + item.key() + "\" is not valid for command \"" +
               command_name(config.command) + "\"");
  }

  if (json.contains("p")) config.p = int_from_json(json.at("p"), "p");
  const char* level_key =
      (config.command == Command::tower || config.command == Command::table)
          ? "n_max"
          : "n";
  if (json.contains(level_key)) {
    std::uint64_t n = uint_from_json(json.at(level_key), level_key);
    if (n > 64) fail(ErrorCode::invalid_argument, "level is out of range");
    config.n = static_cast<unsigned>(n);
  }
  if (json.contains("K_degree"))
    config.k_degree = int_from_json(json.at("K_degree"), "K_degree");
  if (json.contains("C")) config.c = rat_from_json(json.at("C"), "C");
  if (json.contains("h1_base"))
    config.h1_base = int_from_json(json.at("h1_base"), "h1_base");
  if (json.contains("mu_zero")) config.mu_zero = json.at("mu_zero").get<bool>();
  if (json.contains("h1_triviality"))
    config.h1_triviality = json.at("h1_triviality").get<bool>();
  if (json.contains("linearly_disjoint"))
    config.linearly_disjoint = json.at("linearly_disjoint").get<bool>();
  if (json.contains("degree_overrides")) {
    const auto& overrides = json.at("degree_overrides");
    if (!overrides.is_object())
      fail(ErrorCode::invalid_argument, "degree_overrides must be an object");
    for (const auto& item : overrides.items()) {
      Int level = int_from_string(item.key());
      if (level < 0 || level > 64)
        fail(ErrorCode::invalid_argument, "degree_overrides level is out of range");
      config.degree_overrides[level.convert_to<unsigned>()] =
          int_from_json(item.value(), "degree_overrides value");
    }
  }
  if (json.contains("action")) {
    const auto& action = json.at("action");
    if (!action.is_object())
      fail(ErrorCode::invalid_argument, "action must be an object");
    for (const auto& item : action.items())
      if (item.key() != "kind" && item.key() != "generators")
        fail(ErrorCode::invalid_argument,
             "action key \"" + item.key() + "\" is not recognized");
    if (action.contains("kind"))
      config.action.kind = action.at("kind").get<std::string>();
    if (config.action.kind != "full-units" && config.action.kind != "trivial" &&
        config.action.kind != "scalar" && config.action.kind != "matrix")
      fail(ErrorCode::invalid_argument,
           "unknown action kind \"" + config.action.kind + "\"");
    if (action.contains("generators")) {
      const auto& gens = action.at("generators");
      if (!gens.is_array())
        fail(ErrorCode::invalid_argument, "action generators must be an array");
      if (config.action.kind == "scalar") {
        for (const auto& g : gens)
          config.action.scalar_generators.push_back(
              int_from_json(g, "scalar generator"));
      } else if (config.action.kind == "matrix") {
        for (const auto& g : gens) {
          if (!g.is_array() || g.size() != 4)
            fail(ErrorCode::invalid_argument,
                 "matrix generators must be arrays [a, b, c, d]");
          config.action.matrix_generators.push_back(
              Mat2{int_from_json(g.at(0), "matrix entry"),
                   int_from_json(g.at(1), "matrix entry"),
                   int_from_json(g.at(2), "matrix entry"),
                   int_from_json(g.at(3), "matrix entry")});
        }
      } else if (!gens.empty()) {
        fail(ErrorCode::invalid_argument,
             "generators are only meaningful for scalar or matrix actions");
      }
    }
  }
  if (json.contains("budget"))
    config.budget = uint_from_json(json.at("budget"), "budget");
  if (json.contains("ranks")) {
    const auto& ranks = json.at("ranks");
    if (!ranks.is_array())
      fail(ErrorCode::invalid_argument, "ranks must be an array");
    for (const auto& r : ranks) {
      if (!r.is_number_integer() || r.get<std::int64_t>() < 0)
        fail(ErrorCode::invalid_argument, "ranks must be non-negative integers");
      config.ranks.push_back(r.get<std::int64_t>());
    }
  }
  if (json.contains("h1")) {
    if (!json.at("h1").is_number_integer() || json.at("h1").get<std::int64_t>() < 0)
      fail(ErrorCode::invalid_argument, "h1 must be a non-negative integer");
    config.h1 = json.at("h1").get<std::int64_t>();
  }
  if (json.contains("start_index"))
    config.start_index = uint_from_json(json.at("start_index"), "start_index");
  if (json.contains("format"))
    config.format = format_from_name(json.at("format").get<std::string>());
  if (json.contains("output"))
    config.output = json.at("output").get<std::string>();
  return config;
}

RunConfig config_from_json_text(const std::string& text) {
  nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    fail(ErrorCode::invalid_argument, "config is not valid JSON");
  return config_from_json(parsed);
}

std::string run(const RunConfig& config) {
  Rendered rendered;
  switch (config.command) {
    case Command::orbits: rendered = render_orbits(config); break;
    case Command::irreps: rendered = render_irreps(config); break;
    case Command::tower: rendered = render_tower(config); break;
    case Command::bound: rendered = render_bound(config); break;
    case Command::table: rendered = render_table(config); break;
    case Command::filtration_bound:
      rendered = render_filtration_bound(config);
      break;
  }
  switch (config.format) {
    case OutputFormat::csv: return rendered.csv;
    case OutputFormat::plain: {
      std::string text = rendered.plain;
      for (const std::string& warning : rendered.warnings)
        text += "warning: " + warning + "\n";
      return text;
    }
    case OutputFormat::json: break;
  }
  ordered_json report;
  report["config"] = config_to_json(config);
  report["results"] = rendered.results;
  ordered_json warnings = ordered_json::array();
  for (const std::string& warning : rendered.warnings) warnings.push_back(warning);
  report["warnings"] = warnings;
  return report.dump(2) + "\n";
}

}  // namespace fermatrank
