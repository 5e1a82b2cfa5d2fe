#include "fluxo/config.hpp"

#include <fstream>
#include <sstream>

namespace fluxo {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing chars");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& value, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing chars");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected an integer, got '" + value + "'");
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(where + ": empty key or value");

    if (key == "qubit.e_c_ghz") cfg.qubit.e_c = parse_double(value, where);
    else if (key == "qubit.e_j_ghz") cfg.qubit.e_j = parse_double(value, where);
    else if (key == "qubit.e_l_ghz") cfg.qubit.e_l = parse_double(value, where);
    else if (key == "qubit.flux_phi") cfg.qubit.flux_phi = parse_double(value, where);
    else if (key == "qubit.lambda") cfg.qubit.lambda = parse_double(value, where);
    else if (key == "qubit.cd_ratio") cfg.qubit.cd_ratio = parse_double(value, where);
    else if (key == "noise.a_low_e") cfg.noise.a_low = parse_double(value, where);
    else if (key == "noise.a_high_e_per_sqrthz") cfg.noise.a_high = parse_double(value, where);
    else if (key == "sweep.n_min") cfg.n_min = parse_int(value, where);
    else if (key == "sweep.n_max") cfg.n_max = parse_int(value, where);
    else if (key == "solver.pts_per_2pi") cfg.solver_pts_per_2pi = parse_int(value, where);
    else if (key == "oracle.n") cfg.oracle_n = parse_int(value, where);
    else if (key == "oracle.n_max") cfg.oracle_n_max = parse_int(value, where);
    else if (key == "oracle.scan_points") cfg.oracle_scan_points = parse_int(value, where);
    else if (key == "oracle.e_cda_ghz") cfg.oracle_e_cda = parse_double(value, where);
    else if (key == "oracle.e_cdb_ghz") cfg.oracle_e_cdb = parse_double(value, where);
    else if (key == "output.path") cfg.out_path = value;
    else if (key == "output.format") cfg.format = value;
    else throw ConfigError(where + ": unknown key '" + key + "'");
  }

  try {
    cfg.qubit.validate();
  } catch (const std::exception& e) {
    throw ConfigError(origin + ": qubit section invalid: " + e.what());
  }
  try {
    cfg.noise.cd_ratio = cfg.qubit.cd_ratio;
    cfg.noise.validate();
  } catch (const std::exception& e) {
    throw ConfigError(origin + ": noise section invalid: " + e.what());
  }
  if (cfg.n_min < 1)
    throw ConfigError(origin + ": sweep.n_min must be >= 1");
  if (cfg.n_max != 0 && cfg.n_max < cfg.n_min)
    throw ConfigError(origin + ": sweep.n_max must be >= sweep.n_min");
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError(origin + ": output.format must be csv or json");
  if (cfg.oracle_n < 2 || cfg.oracle_n > 3)
    throw ConfigError(origin + ": oracle.n must be 2 or 3");
  if (cfg.oracle_n_max < 1 || cfg.oracle_n_max > 12)
    throw ConfigError(origin + ": oracle.n_max must be in [1, 12]");
  if (cfg.oracle_scan_points < 4)
    throw ConfigError(origin + ": oracle.scan_points must be >= 4");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace fluxo
