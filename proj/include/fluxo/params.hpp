#pragma once

#include <cmath>
#include <stdexcept>

namespace fluxo {

// Target qubit parameters, held fixed while the junction count N varies.
// All energies are E/h in GHz.
struct QubitSpec {
  double e_c = 0.0;  // effective charging energy
  double e_j = 0.0;  // black-sheep Josephson energy
  double e_l = 0.0;  // inductive energy
  double flux_phi = M_PI;  // external flux phase, radians
  double lambda = 1.0;     // array-mode wavefunction broadening knob, (0, 1]
  double cd_ratio = 1.0;   // ground-capacitance ratio C_d^b / C_d^a

  void validate() const {
    if (!(e_c > 0.0) || !(e_j > 0.0) || !(e_l > 0.0))
      throw std::invalid_argument("QubitSpec: energies must be positive");
    if (!(lambda > 0.0) || lambda > 1.0)
      throw std::invalid_argument("QubitSpec: lambda must lie in (0, 1]");
    if (cd_ratio < 0.0)
      throw std::invalid_argument("QubitSpec: cd_ratio must be >= 0");
    if (!std::isfinite(flux_phi))
      throw std::invalid_argument("QubitSpec: flux_phi must be finite");
  }
};

// N-independent circuit scales derived once per spec.
struct DerivedScales {
  double e_cb = 0.0;         // e^2/2C^b
  double script_e_ca = 0.0;  // N * E_C^a, independent of N
};

struct ArrayJunctionParams {
  int n = 0;
  double e_ja = 0.0;   // N * E_L
  double e_ca = 0.0;   // script_e_ca / N
  double ratio = 0.0;  // E_J^a / E_C^a = N^2 E_L / script_e_ca
};

inline DerivedScales derive_shared_scales(const QubitSpec& spec) {
  spec.validate();
  DerivedScales s;
  s.e_cb = spec.e_c * (1.0 + spec.e_l / spec.e_j);
  s.script_e_ca = 1.0 / (1.0 / spec.e_c - 1.0 / s.e_cb);
  return s;
}

inline ArrayJunctionParams array_params(const DerivedScales& scales,
                                        const QubitSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("array_params: n must be >= 1");
  ArrayJunctionParams p;
  p.n = n;
  p.e_ja = static_cast<double>(n) * spec.e_l;
  p.e_ca = scales.script_e_ca / static_cast<double>(n);
  p.ratio = p.e_ja / p.e_ca;
  return p;
}

}  // namespace fluxo
