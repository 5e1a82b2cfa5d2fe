#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "fluxo/params.hpp"

namespace fluxo {

// Exact charge-basis model of the (N+1)-island circuit for small N, used to
// validate the effective single-mode pipeline.  Coordinates are the overall
// island mode tau (whose conjugate charge is conserved and set to zero) and
// the N array-junction phases.  The capacitance matrix is stored as
//   C_hat = sum over branch capacitors of (1/E_t) w_t w_t^T,
// with E_t = e^2/2C_t in GHz and w_t the branch coefficient vector in
// (tau, Theta_1..Theta_N); the kinetic form is 4 x^T C_hat^{-1} x with
// x = (Q_tau/2, n_1 + Q_1/2, ..., n_N + Q_N/2), charges in units of e.
struct FullCircuitModel {
  int n = 2;         // array junction count, 2..3
  double e_ja = 0.0; // array junction Josephson energy, GHz
  double e_jb = 0.0; // black-sheep Josephson energy, GHz
  Eigen::MatrixXd capacitance;        // (N+1) x (N+1), units 1/GHz
  std::vector<double> charge_offsets; // Q_tau, Q_1..Q_N, units of e
  double flux_phi = M_PI;
  int n_max = 8;     // charge truncation per mode

  int dim() const;
  void validate() const;
};

// Builds a circuit from independent junction-level parameters (all GHz;
// e_ca = E_C^a per junction, e_cb = e^2/2C^b).  Ground capacitors are
// included when e_cda/e_cdb (= e^2/2C_d; 0 disables) are positive.  Offsets
// default to the sweet spot (Q_tau = 0, Q_j = e/2).
FullCircuitModel make_circuit(int n, double e_ja, double e_jb, double e_ca,
                              double e_cb, int n_max, double e_cda = 0.0,
                              double e_cdb = 0.0);

// Same, but derived from the effective qubit parameters at junction count n.
FullCircuitModel make_matched_circuit(const QubitSpec& spec, int n, int n_max,
                                      double e_cda = 0.0, double e_cdb = 0.0);

// Charge-basis operator: diagonal kinetic part plus nearest-neighbor hops
// (-e_ja/2 per mode) and the black-sheep all-mode hop with phase flux_phi.
struct ChargeBasisHamiltonian {
  int n = 0;
  int n_max = 0;
  int dim = 0;
  std::vector<double> diag;            // GHz
  double hop = 0.0;                    // single-mode up-shift amplitude
  std::complex<double> bs_hop{0.0, 0.0};  // all-mode up-shift amplitude

  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  Eigen::MatrixXcd dense() const;
};

ChargeBasisHamiltonian build_full_hamiltonian(const FullCircuitModel& model);

// Lowest k eigenvalues (GHz), dense below ~1200 states, Lanczos with full
// reorthogonalization above.  Deterministic for fixed inputs.
std::vector<double> lowest_levels(const FullCircuitModel& model, int k);

// Sweeps Q_{island_index} (1-based over the array islands) and returns
// (Q, E0, E1) triples.
std::vector<std::array<double, 3>> dispersion_scan(
    const FullCircuitModel& model, int island_index,
    const std::vector<double>& q_values);

// Least-squares fit of E(Q) = offset + amp_cos cos(pi Q) + amp_sin sin(pi Q).
// With Q_tau = 0 the tight-binding form predicts amp_cos = -eps/2, so the
// fitted dispersion amplitude is eps_fit = -2 * amp_cos (signed).
struct CosineFit {
  double offset = 0.0;
  double amp_cos = 0.0;
  double amp_sin = 0.0;
  double r_squared = 0.0;
  double eps_fit() const { return -2.0 * amp_cos; }
};

CosineFit fit_cosine(const std::vector<double>& q,
                     const std::vector<double>& e);

}  // namespace fluxo
