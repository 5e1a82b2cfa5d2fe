#include "fluxo/tightbinding.hpp"

#include <cmath>
#include <stdexcept>

namespace fluxo {

double epsilon_n(const QubitSpec& spec, const EigenSolution& sol,
                 const DerivedScales& scales, int n, int level) {
  if (n < 1) throw std::invalid_argument("epsilon_n: n must be >= 1");
  const double nn = static_cast<double>(n);
  const double e_l = spec.e_l;
  const double ecal = scales.script_e_ca;
  const double lam2 = spec.lambda * spec.lambda;
  const double e_l_broad = lam2 * e_l;

  const auto one = [](double) { return 1.0; };
  const double a = shifted_overlap(sol, level, one);
  const double b = shifted_overlap(
      sol, level, [nn](double th) { return th * th / (2.0 * nn); });
  const double c = shifted_overlap(sol, level, [nn](double th) {
    return (nn - 2.0) * std::cos((th + M_PI) / nn);
  });
  const double e1 = expectation(
      sol, level, [nn](double th) { return th * th / (2.0 * nn); });
  const double e2 = expectation(
      sol, level, [nn](double th) { return nn * std::cos(th / nn); });

  const double pref =
      4.0 * nn * e_l *
      std::exp(-M_PI * M_PI * std::sqrt(e_l_broad / (8.0 * ecal)) * (nn - 1.0));
  const double inner =
      lam2 * (M_PI * M_PI / 2.0) * (1.0 - 1.0 / nn) * a + (b - e1 * a) +
      std::exp(-std::sqrt(ecal / (2.0 * e_l_broad)) * (nn - 1.0) / (nn * nn)) *
          (c - e2 * a);
  return pref * inner;
}

DispersionAmplitudes dispersion_amplitudes(const QubitSpec& spec,
                                           const EigenSolution& sol,
                                           const DerivedScales& scales,
                                           int n) {
  DispersionAmplitudes d;
  d.n = n;
  d.lambda_used = spec.lambda;
  d.eps0 = epsilon_n(spec, sol, scales, n, 0);
  d.eps1 = epsilon_n(spec, sol, scales, n, 1);
  return d;
}

double dispersion_energy(const DispersionAmplitudes& eps,
                         const OffsetCharges& charges, int level) {
  if (static_cast<int>(charges.q_list.size()) != eps.n)
    throw std::invalid_argument("dispersion_energy: need N charges");
  if (level != 0 && level != 1)
    throw std::invalid_argument("dispersion_energy: level must be 0 or 1");
  const double e = (level == 0) ? eps.eps0 : eps.eps1;
  double sum = 0.0;
  for (double q : charges.q_list)
    sum += std::cos(M_PI * q - M_PI * charges.q_tau / 2.0);
  return -(e / 2.0) * sum;
}

}  // namespace fluxo
