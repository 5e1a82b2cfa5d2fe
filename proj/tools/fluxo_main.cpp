#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fluxo/config.hpp"
#include "fluxo/coherence.hpp"
#include "fluxo/oracle.hpp"
#include "fluxo/params.hpp"
#include "fluxo/spectrum.hpp"
#include "fluxo/sweep.hpp"
#include "fluxo/tightbinding.hpp"

namespace {

using nlohmann::json;

// CSV/JSON number formatting: C locale, fixed precision, explicit "inf".
std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json num_or_inf(double v) {
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

struct CommonOpts {
  std::string config_path;
  double lambda_override = -1.0;
  std::string out_path;
  std::string format;
  int n_min = 0;
  int n_max = 0;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--config", o->config_path, "config file path")->required();
  cmd->add_option("--lambda", o->lambda_override,
                  "override qubit.lambda, in (0, 1]");
  cmd->add_option("--out", o->out_path, "output file (default stdout)");
  cmd->add_option("--format", o->format, "csv | json");
  cmd->add_option("--n-min", o->n_min, "override sweep.n_min");
  cmd->add_option("--n-max", o->n_max, "override sweep.n_max");
  cmd->add_option("--jobs", o->jobs, "parallel sweep workers")
      ->check(CLI::PositiveNumber);
}

fluxo::RunConfig resolve(const CommonOpts& o) {
  fluxo::RunConfig cfg = fluxo::load_config(o.config_path);
  if (o.lambda_override > 0.0) cfg.qubit.lambda = o.lambda_override;
  if (!o.out_path.empty()) cfg.out_path = o.out_path;
  if (!o.format.empty()) {
    if (o.format != "csv" && o.format != "json")
      throw fluxo::ConfigError("--format must be csv or json");
    cfg.format = o.format;
  }
  if (o.n_min > 0) cfg.n_min = o.n_min;
  if (o.n_max > 0) cfg.n_max = o.n_max;
  cfg.qubit.validate();
  if (cfg.n_max != 0 && cfg.n_max < cfg.n_min)
    throw fluxo::ConfigError("sweep range is empty after overrides");
  return cfg;
}

int effective_n_max(const fluxo::RunConfig& cfg,
                    const fluxo::DerivedScales& scales) {
  if (cfg.n_max > 0) return cfg.n_max;
  return fluxo::default_n_max(scales, cfg.qubit);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

int cmd_derive(const CommonOpts& o) {
  const fluxo::RunConfig cfg = resolve(o);
  const fluxo::DerivedScales scales = fluxo::derive_shared_scales(cfg.qubit);
  const int n_max = effective_n_max(cfg, scales);

  std::ostringstream out;
  out << "e_cb_ghz = " << fmt(scales.e_cb) << "\n";
  out << "script_e_ca_ghz = " << fmt(scales.script_e_ca) << "\n";
  out << "N,EJa_GHz,ECa_GHz,EJa_over_ECa\n";
  for (int n = cfg.n_min; n <= n_max; ++n) {
    const auto p = fluxo::array_params(scales, cfg.qubit, n);
    out << p.n << "," << fmt(p.e_ja) << "," << fmt(p.e_ca) << ","
        << fmt(p.ratio) << "\n";
  }
  write_text(cfg.out_path, out.str());
  return 0;
}

int cmd_spectrum(const CommonOpts& o, const std::string& dump_prefix) {
  const fluxo::RunConfig cfg = resolve(o);
  fluxo::EigenSolution sol;
  if (cfg.solver_pts_per_2pi > 0) {
    const auto grid = fluxo::make_phase_grid(cfg.qubit, cfg.solver_pts_per_2pi);
    sol = fluxo::solve_fluxonium(cfg.qubit, grid, 2);
  } else {
    sol = fluxo::solve_fluxonium_converged(cfg.qubit);
  }
  const double me = fluxo::charge_matrix_element(sol);

  json report;
  report["e0_ghz"] = sol.energies[0];
  report["e1_ghz"] = sol.energies[1];
  report["f01_ghz"] = sol.f01;
  report["charge_matrix_element"] = me;
  report["grid_points"] = sol.grid.points;
  report["grid_pts_per_2pi"] = sol.grid.pts_per_2pi;
  write_text(cfg.out_path, report.dump(2) + "\n");

  if (!dump_prefix.empty()) {
    for (std::size_t lev = 0; lev < sol.wavefunctions.size(); ++lev) {
      std::ofstream psi(dump_prefix + "_psi" + std::to_string(lev) + ".dat");
      if (!psi) throw std::runtime_error("cannot open wavefunction dump file");
      for (int i = 0; i < sol.grid.points; ++i)
        psi << fmt(sol.grid.theta(i)) << " " << fmt(sol.wavefunctions[lev][i])
            << "\n";
    }
  }
  return 0;
}

std::string sweep_csv(const fluxo::SweepResult& result) {
  std::ostringstream out;
  out << "N,T_phi_us,T1_us,T2_us,f01_GHz,EJa_over_ECa,eps0_GHz,eps1_GHz\n";
  for (const auto& r : result.records) {
    out << r.n << "," << fmt(r.t_phi) << "," << fmt(r.t_one) << ","
        << fmt(r.t_two) << "," << fmt(r.f01) << "," << fmt(r.ratio_ja_ca)
        << "," << fmt(r.eps0) << "," << fmt(r.eps1) << "\n";
  }
  return out.str();
}

int cmd_sweep(const CommonOpts& o) {
  const fluxo::RunConfig cfg = resolve(o);
  const auto scales = fluxo::derive_shared_scales(cfg.qubit);
  const int n_max = effective_n_max(cfg, scales);
  const auto result =
      fluxo::sweep_t2(cfg.qubit, cfg.noise, cfg.n_min, n_max, o.jobs);

  json summary;
  summary["n_opt"] = result.n_opt;
  summary["t2_opt_us"] = num_or_inf(result.t2_opt);
  summary["band_low"] = result.band_low;
  summary["band_high"] = result.band_high;

  if (cfg.format == "json") {
    json body;
    body["summary"] = summary;
    json rows = json::array();
    for (const auto& r : result.records) {
      json row;
      row["n"] = r.n;
      row["t_phi_us"] = num_or_inf(r.t_phi);
      row["t1_us"] = num_or_inf(r.t_one);
      row["t2_us"] = num_or_inf(r.t_two);
      row["f01_ghz"] = r.f01;
      row["eja_over_eca"] = r.ratio_ja_ca;
      row["eps0_ghz"] = r.eps0;
      row["eps1_ghz"] = r.eps1;
      rows.push_back(row);
    }
    body["records"] = rows;
    write_text(cfg.out_path, body.dump(2) + "\n");
  } else {
    write_text(cfg.out_path, sweep_csv(result));
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_oracle(const CommonOpts& o, const std::string& scan_out) {
  const fluxo::RunConfig cfg = resolve(o);
  const auto scales = fluxo::derive_shared_scales(cfg.qubit);
  const auto ap = fluxo::array_params(scales, cfg.qubit, cfg.oracle_n);

  const auto model =
      fluxo::make_matched_circuit(cfg.qubit, cfg.oracle_n, cfg.oracle_n_max,
                                  cfg.oracle_e_cda, cfg.oracle_e_cdb);
  const auto exact = fluxo::lowest_levels(model, 2);
  const double f01_exact = exact[1] - exact[0];

  const auto sol = fluxo::solve_fluxonium_converged(cfg.qubit);
  const auto eps =
      fluxo::dispersion_amplitudes(cfg.qubit, sol, scales, cfg.oracle_n);

  std::vector<double> qs;
  for (int i = 0; i < cfg.oracle_scan_points; ++i)
    qs.push_back(2.0 * i / cfg.oracle_scan_points);
  const auto scan = fluxo::dispersion_scan(model, 1, qs);

  std::vector<double> e0(scan.size()), e1(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) {
    e0[i] = scan[i][1];
    e1[i] = scan[i][2];
  }
  const auto fit0 = fluxo::fit_cosine(qs, e0);
  const auto fit1 = fluxo::fit_cosine(qs, e1);

  if (!scan_out.empty()) {
    std::ostringstream csv;
    csv << "Q_e,E0_GHz,E1_GHz\n";
    for (const auto& row : scan)
      csv << fmt(row[0]) << "," << fmt(row[1]) << "," << fmt(row[2]) << "\n";
    write_text(scan_out, csv.str());
  }

  json report;
  report["n"] = cfg.oracle_n;
  report["eja_over_eca"] = ap.ratio;
  report["f01_exact_ghz"] = f01_exact;
  report["f01_effective_ghz"] = sol.f01;
  report["f01_rel_diff"] = (f01_exact - sol.f01) / sol.f01;
  report["eps0_exact_ghz"] = fit0.eps_fit();
  report["eps1_exact_ghz"] = fit1.eps_fit();
  report["eps0_tb_ghz"] = eps.eps0;
  report["eps1_tb_ghz"] = eps.eps1;
  report["eps0_exact_over_tb"] = fit0.eps_fit() / eps.eps0;
  report["eps1_exact_over_tb"] = fit1.eps_fit() / eps.eps1;
  report["cosine_fit_r2_e0"] = fit0.r_squared;
  report["cosine_fit_r2_e1"] = fit1.r_squared;
  write_text(cfg.out_path, report.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fluxonium charge-noise coherence toolkit"};
  app.require_subcommand(1);

  CommonOpts derive_opts, spectrum_opts, sweep_opts, oracle_opts;
  std::string dump_prefix, scan_out;

  auto* derive = app.add_subcommand("derive", "derived scales and per-N table");
  add_common(derive, &derive_opts);
  auto* spectrum =
      app.add_subcommand("spectrum", "effective-model eigensolution summary");
  add_common(spectrum, &spectrum_opts);
  spectrum->add_option("--dump-psi", dump_prefix,
                       "write PREFIX_psiN.dat wavefunction files");
  auto* sweep = app.add_subcommand("sweep", "T2 sweep over N");
  add_common(sweep, &sweep_opts);
  auto* oracle =
      app.add_subcommand("oracle", "exact small-N circuit comparison");
  add_common(oracle, &oracle_opts);
  oracle->add_option("--scan-out", scan_out, "CSV dump of the dispersion scan");

  try {
    app.parse(argc, argv);
    if (derive->parsed()) return cmd_derive(derive_opts);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts, dump_prefix);
    if (sweep->parsed()) return cmd_sweep(sweep_opts);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, scan_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const fluxo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const fluxo::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
