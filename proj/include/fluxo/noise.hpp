#pragma once

#include <stdexcept>

namespace fluxo {

// Charge-noise spectral model: 1/f at low frequency, ohmic at the qubit
// transition.  Charges are expressed in units of e throughout.
struct NoiseSpec {
  double a_low = 1e-3;    // 1/f amplitude, units of e
  double a_high = 5.2e-9; // ohmic amplitude, units of e/sqrt(Hz)
  double f_ref = 1.0;     // ohmic reference frequency, GHz
  double cd_ratio = 1.0;  // C_d^b / C_d^a, duplicated from the qubit spec

  void validate() const {
    if (a_low < 0.0 || a_high < 0.0 || cd_ratio < 0.0)
      throw std::invalid_argument("NoiseSpec: amplitudes must be >= 0");
    if (!(f_ref > 0.0))
      throw std::invalid_argument("NoiseSpec: f_ref must be positive");
  }
};

// Ohmic spectral density S/e^2 in 1/Hz at the transition frequency f01 (GHz).
inline double s_charge_over_e2(const NoiseSpec& noise, double f01) {
  noise.validate();
  if (f01 < 0.0) throw std::invalid_argument("s_charge_over_e2: f01 >= 0");
  return noise.a_high * noise.a_high * f01 / noise.f_ref;
}

inline double low_freq_amplitude(const NoiseSpec& noise) {
  noise.validate();
  return noise.a_low;
}

}  // namespace fluxo
