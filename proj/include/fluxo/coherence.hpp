#pragma once

#include "fluxo/noise.hpp"
#include "fluxo/params.hpp"
#include "fluxo/spectrum.hpp"
#include "fluxo/tightbinding.hpp"

namespace fluxo {

// First-order 1/f dephasing gives a Gaussian decay exp(-(sigma*t)^2 * L) with
// a slowly varying log factor L = |ln(omega_ir * t)|.  The 1/e time therefore
// carries sqrt(2L) relative to the bare sigma; we fix it at the conventional
// reference point omega_ir = 2*pi * 1 Hz, t = 1 us:
//   sqrt(2 * |ln(2*pi * 1e-6)|) = 4.89441181176144.
inline constexpr double k_one_over_f_log_factor = 4.89441181176144;

// The ohmic amplitude is quoted for the symmetrized spectrum; the golden-rule
// rate uses the one-sided density, which is twice that.
inline constexpr double k_one_sided_psd = 2.0;

struct CoherenceRecord {
  int n = 0;
  double t_phi = 0.0;      // us, may be +inf
  double t_one = 0.0;      // us, may be +inf
  double t_two = 0.0;      // us
  double f01 = 0.0;        // GHz
  double ratio_ja_ca = 0.0;
  double eps0 = 0.0;       // GHz
  double eps1 = 0.0;       // GHz
  double eps_diff = 0.0;   // |eps1 - eps0|, GHz
};

// Pure-dephasing time in us from the dispersion difference under 1/f noise.
double t_phi(const DispersionAmplitudes& eps, const NoiseSpec& noise, int n);

// Relaxation time in us from ohmic charge noise at f01.
double t_one(const QubitSpec& spec, const EigenSolution& sol, double matelem,
             const NoiseSpec& noise, int n);

// 1/T2 = 1/Tphi + 1/(2*T1), with infinities handled exactly.
double t_two(double t_phi_us, double t_one_us);

}  // namespace fluxo
