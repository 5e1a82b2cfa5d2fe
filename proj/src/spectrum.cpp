#include "fluxo/spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace fluxo {

double trapezoid(const std::vector<double>& values, double h) {
  if (values.size() < 2) return 0.0;
  double s = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
  return s * h;
}

PhaseGrid make_phase_grid(const QubitSpec& spec, int pts_per_2pi,
                          double extra_width) {
  spec.validate();
  const double sigma = std::pow(8.0 * spec.e_c / spec.e_l, 0.25);
  double target = std::max(4.0 * M_PI, 8.0 * sigma) + 2.0 * M_PI + extra_width;
  PhaseGrid g;
  g.pts_per_2pi = pts_per_2pi;
  const double h = g.spacing();
  int half = static_cast<int>(std::ceil(target / h));
  half = std::max(half, 256);  // keeps points >= 512 on coarse grids
  g.theta_max = half * h;
  g.points = 2 * half + 1;
  g.validate();
  return g;
}

namespace {

// Enforces the convention psi > 0 at the first extremum from the left.
void fix_sign(std::vector<double>& psi) {
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::abs(v));
  const double thresh = 1e-6 * peak;
  for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
    if (std::abs(psi[i]) < thresh) continue;
    const double dl = psi[i] - psi[i - 1];
    const double dr = psi[i + 1] - psi[i];
    if (dl * dr <= 0.0) {
      if (psi[i] < 0.0)
        for (double& v : psi) v = -v;
      return;
    }
  }
}

}  // namespace

EigenSolution solve_fluxonium(const QubitSpec& spec, const PhaseGrid& grid,
                              int n_levels) {
  spec.validate();
  grid.validate();
  if (n_levels < 1) throw std::invalid_argument("n_levels must be >= 1");

  const int n = grid.points;
  const double h = grid.spacing();
  std::vector<double> diag(n), off(n - 1, -4.0 * spec.e_c / (h * h));
  for (int i = 0; i < n; ++i) {
    const double th = grid.theta(i);
    diag[i] = 8.0 * spec.e_c / (h * h) +
              spec.e_j * (1.0 - std::cos(th - spec.flux_phi)) +
              spec.e_l * th * th / 2.0;
  }

  std::vector<double> w(n), z(static_cast<std::size_t>(n) * n_levels);
  std::vector<lapack_int> isuppz(2 * std::max(1, n_levels));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_ROW_MAJOR, 'V', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1,
      n_levels, 0.0, &found, w.data(), z.data(), n_levels, isuppz.data());
  if (info != 0 || found < n_levels)
    throw SolverError("tridiagonal eigensolver failed (info=" +
                      std::to_string(info) + ")");

  EigenSolution sol;
  sol.grid = grid;
  sol.energies.assign(w.begin(), w.begin() + n_levels);
  sol.wavefunctions.resize(n_levels);
  const double inv_sqrt_h = 1.0 / std::sqrt(h);
  for (int lev = 0; lev < n_levels; ++lev) {
    auto& psi = sol.wavefunctions[lev];
    psi.resize(n);
    for (int i = 0; i < n; ++i)
      psi[i] = z[static_cast<std::size_t>(i) * n_levels + lev] * inv_sqrt_h;
    fix_sign(psi);
  }
  if (n_levels >= 2) sol.f01 = sol.energies[1] - sol.energies[0];

  for (int lev = 0; lev < n_levels; ++lev) {
    const auto& psi = sol.wavefunctions[lev];
    if (std::abs(psi.front()) > 1e-10 || std::abs(psi.back()) > 1e-10)
      throw SolverError("wavefunction does not decay at the grid boundary");
    std::vector<double> sq(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) sq[i] = psi[i] * psi[i];
    if (std::abs(trapezoid(sq, h) - 1.0) > 1e-8)
      throw SolverError("wavefunction normalization check failed");
  }
  return sol;
}

EigenSolution solve_fluxonium_converged(const QubitSpec& spec, int n_levels,
                                        double tol_ghz, int start, int limit) {
  double extra = 0.0;
  for (int widen = 0; widen < 6; ++widen) {
    try {
      EigenSolution prev;
      bool have_prev = false;
      for (int k = start; k <= limit; k *= 2) {
        EigenSolution cur =
            solve_fluxonium(spec, make_phase_grid(spec, k, extra), n_levels);
        if (have_prev) {
          bool ok = true;
          for (int lev = 0; lev < std::min(n_levels, 2); ++lev)
            ok = ok && std::abs(cur.energies[lev] - prev.energies[lev]) < tol_ghz;
          if (ok) return cur;
        }
        prev = std::move(cur);
        have_prev = true;
      }
      throw SolverError(
          "eigenvalues not converged at the grid refinement limit");
    } catch (const SolverError& e) {
      if (std::string(e.what()).find("boundary") == std::string::npos) throw;
      extra += 2.0 * M_PI;  // widen and retry when the tails are clipped
    }
  }
  throw SolverError("grid widening limit reached without boundary decay");
}

double charge_matrix_element(const EigenSolution& sol) {
  if (sol.wavefunctions.size() < 2)
    throw std::invalid_argument("charge_matrix_element needs levels 0 and 1");
  const auto& p0 = sol.wavefunctions[0];
  const auto& p1 = sol.wavefunctions[1];
  const double h = sol.grid.spacing();
  const std::size_t n = p1.size();
  // Fourth-order central differences; the boundary values are negligible
  // (decay is enforced), so second-order one-sided stencils suffice there.
  std::vector<double> prod(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d;
    if (i >= 2 && i + 2 < n)
      d = (-p1[i + 2] + 8.0 * p1[i + 1] - 8.0 * p1[i - 1] + p1[i - 2]) /
          (12.0 * h);
    else if (i == 0)
      d = (p1[1] - p1[0]) / h;
    else if (i + 1 == n)
      d = (p1[n - 1] - p1[n - 2]) / h;
    else
      d = (p1[i + 1] - p1[i - 1]) / (2.0 * h);
    prod[i] = p0[i] * d;
  }
  return std::abs(trapezoid(prod, h));
}

double shifted_overlap(const EigenSolution& sol, int n_level,
                       const std::function<double(double)>& weight) {
  const auto& psi = sol.wavefunctions.at(n_level);
  const int shift = sol.grid.pts_per_2pi;
  const int n = static_cast<int>(psi.size());
  if (shift >= n)
    throw std::invalid_argument("grid too narrow for a 2*pi shift");
  // The shift must stay inside the decayed region of the support.
  if (std::abs(psi[n - 1 - shift]) > 1e-8)
    throw std::invalid_argument("2*pi shift exits the wavefunction support");
  std::vector<double> prod(n, 0.0);
  for (int i = 0; i + shift < n; ++i)
    prod[i] = psi[i + shift] * psi[i] * weight(sol.grid.theta(i));
  return trapezoid(prod, sol.grid.spacing());
}

double expectation(const EigenSolution& sol, int n_level,
                   const std::function<double(double)>& weight) {
  const auto& psi = sol.wavefunctions.at(n_level);
  std::vector<double> prod(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    prod[i] = psi[i] * psi[i] * weight(sol.grid.theta(static_cast<int>(i)));
  return trapezoid(prod, sol.grid.spacing());
}

}  // namespace fluxo
