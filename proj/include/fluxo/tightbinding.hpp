#pragma once

#include <vector>

#include "fluxo/params.hpp"
#include "fluxo/spectrum.hpp"

namespace fluxo {

struct DispersionAmplitudes {
  int n = 0;
  double eps0 = 0.0;  // GHz
  double eps1 = 0.0;  // GHz
  double lambda_used = 1.0;
};

struct OffsetCharges {
  double q_tau = 0.0;          // units of e
  std::vector<double> q_list;  // Q_1..Q_N, units of e
};

// Charge-dispersion amplitude of the given level for an N-junction array.
// The broadening factor lambda rescales E_L inside both exponentials and the
// pi^2/2 overlap term, but not the 4*N*E_L prefactor.
double epsilon_n(const QubitSpec& spec, const EigenSolution& sol,
                 const DerivedScales& scales, int n, int level);

DispersionAmplitudes dispersion_amplitudes(const QubitSpec& spec,
                                           const EigenSolution& sol,
                                           const DerivedScales& scales, int n);

// Offset-charge energy shift relative to the sweet spot:
//   -(eps_level/2) * sum_j cos(pi*Q_j - pi*Q_tau/2), charges in units of e.
double dispersion_energy(const DispersionAmplitudes& eps,
                         const OffsetCharges& charges, int level);

}  // namespace fluxo
