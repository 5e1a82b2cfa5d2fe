#include "fluxo/coherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fluxo {

namespace {
constexpr double k_inf = std::numeric_limits<double>::infinity();
}

double t_phi(const DispersionAmplitudes& eps, const NoiseSpec& noise, int n) {
  if (n < 1) throw std::invalid_argument("t_phi: n must be >= 1");
  noise.validate();
  const double nn = static_cast<double>(n);
  const double cd2 = noise.cd_ratio * noise.cd_ratio;
  const double comb = std::sqrt(nn / 2.0 * ((nn - 1.0) / 2.0 + cd2));
  const double eps_diff_hz = 2.0 * M_PI * 1e9 * std::abs(eps.eps1 - eps.eps0);
  const double rate = k_one_over_f_log_factor * comb * eps_diff_hz *
                      low_freq_amplitude(noise) * M_PI / 2.0;  // 1/s
  if (rate == 0.0) return k_inf;
  return 1e6 / rate;
}

double t_one(const QubitSpec& spec, const EigenSolution& sol, double matelem,
             const NoiseSpec& noise, int n) {
  if (n < 1) throw std::invalid_argument("t_one: n must be >= 1");
  if (matelem < 0.0) throw std::invalid_argument("t_one: matelem must be >= 0");
  const double nn = static_cast<double>(n);
  const double cd2 = noise.cd_ratio * noise.cd_ratio;
  const double comb = (nn - 2.0) * (nn - 1.0) / (6.0 * nn) + cd2;
  const double ec_angular_hz = 2.0 * M_PI * 1e9 * spec.e_c;
  const double rate = k_one_sided_psd * 8.0 * ec_angular_hz * ec_angular_hz *
                      matelem * matelem * comb *
                      s_charge_over_e2(noise, sol.f01);  // 1/s
  if (rate == 0.0) return k_inf;
  return 1e6 / rate;
}

double t_two(double t_phi_us, double t_one_us) {
  if (!(t_phi_us > 0.0) || !(t_one_us > 0.0))
    throw std::invalid_argument("t_two: times must be positive");
  const double r_phi = std::isinf(t_phi_us) ? 0.0 : 1.0 / t_phi_us;
  const double r_one = std::isinf(t_one_us) ? 0.0 : 1.0 / (2.0 * t_one_us);
  const double rate = r_phi + r_one;
  if (rate == 0.0) return k_inf;
  return 1.0 / rate;
}

}  // namespace fluxo
