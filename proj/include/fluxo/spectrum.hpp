#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fluxo/params.hpp"

namespace fluxo {

// Thrown when the eigensolver fails or the refinement loop does not converge.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform symmetric grid whose spacing divides 2*pi exactly, so 2*pi shifts
// are plain index shifts.
struct PhaseGrid {
  double theta_max = 0.0;  // theta_min = -theta_max
  int points = 0;          // odd, >= 512
  int pts_per_2pi = 0;     // h = 2*pi / pts_per_2pi

  double theta_min() const { return -theta_max; }
  double spacing() const { return 2.0 * M_PI / pts_per_2pi; }
  double theta(int i) const { return -theta_max + i * spacing(); }

  void validate() const {
    if (points < 512 || points % 2 == 0)
      throw std::invalid_argument("PhaseGrid: points must be odd and >= 512");
    if (pts_per_2pi < 2)
      throw std::invalid_argument("PhaseGrid: pts_per_2pi must be >= 2");
    if (!(theta_max > 0.0))
      throw std::invalid_argument("PhaseGrid: theta_max must be positive");
  }
};

struct EigenSolution {
  PhaseGrid grid;
  std::vector<double> energies;                   // GHz, ascending
  std::vector<std::vector<double>> wavefunctions; // one per level, real
  double f01 = 0.0;                               // energies[1] - energies[0]
};

// Grid covering max(4*pi, 8 * zero-point width of the E_L well) plus 2*pi of
// headroom for shifted overlaps, with theta_max a multiple of the spacing.
PhaseGrid make_phase_grid(const QubitSpec& spec, int pts_per_2pi,
                          double extra_width = 0.0);

// Single solve on a fixed grid.  Checks the boundary-decay precondition and
// the normalization/parity invariants.
EigenSolution solve_fluxonium(const QubitSpec& spec, const PhaseGrid& grid,
                              int n_levels);

// Refines pts_per_2pi by doubling (from `start` up to `limit`) until E0 and
// E1 move by less than tol_ghz; widens the grid if the boundary check fails.
// Throws SolverError if the limit is reached without convergence.
EigenSolution solve_fluxonium_converged(const QubitSpec& spec,
                                        int n_levels = 2,
                                        double tol_ghz = 1e-6,
                                        int start = 64, int limit = 32768);

// |<psi0| n |psi1>| with n = -i d/dtheta (reported as a magnitude).
double charge_matrix_element(const EigenSolution& sol);

// Trapezoidal quadratures used by the tight-binding module:
//   shifted_overlap: integral of psi_n(theta + 2*pi) psi_n(theta) w(theta)
//   expectation:     integral of |psi_n(theta)|^2 w(theta)
// The 2*pi shift is an exact index shift (spacing divides 2*pi).
double shifted_overlap(const EigenSolution& sol, int n_level,
                       const std::function<double(double)>& weight);
double expectation(const EigenSolution& sol, int n_level,
                   const std::function<double(double)>& weight);

// Plain trapezoid rule with uniform spacing h.
double trapezoid(const std::vector<double>& values, double h);

}  // namespace fluxo
