#pragma once

#include <stdexcept>
#include <string>

#include "fluxo/noise.hpp"
#include "fluxo/params.hpp"

namespace fluxo {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key = value config with dotted section prefixes, '#' comments.
struct RunConfig {
  QubitSpec qubit;
  NoiseSpec noise;
  int n_min = 2;
  int n_max = 0;          // 0: derived from the rule-of-thumb band
  int solver_pts_per_2pi = 0;  // 0: automatic refinement
  int oracle_n = 2;
  int oracle_n_max = 8;
  int oracle_scan_points = 17;
  double oracle_e_cda = 0.0;  // e^2/2C_d^a in GHz, 0 disables
  double oracle_e_cdb = 0.0;
  std::string out_path;       // empty: stdout
  std::string format = "csv"; // csv | json
};

// Parses and validates; throws ConfigError with a line- or key-attributed
// message on any problem (unknown key, bad value, failed invariant).
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text,
                            const std::string& origin);

}  // namespace fluxo
