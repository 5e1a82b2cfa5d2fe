#pragma once

#include <utility>
#include <vector>

#include "fluxo/coherence.hpp"
#include "fluxo/noise.hpp"
#include "fluxo/params.hpp"

namespace fluxo {

struct SweepResult {
  std::vector<CoherenceRecord> records;  // ordered by N
  int n_opt = 0;
  double t2_opt = 0.0;  // us
  double band_low = 0.0;
  double band_high = 0.0;
};

// (5, 10) / sqrt(E_L / script_E_C^a), the rule-of-thumb window for n_opt.
std::pair<double, double> rule_of_thumb_band(const DerivedScales& scales,
                                             const QubitSpec& spec);

// Default upper sweep bound: max(4 * band_high, 120), rounded up.
int default_n_max(const DerivedScales& scales, const QubitSpec& spec);

// Scans N in [n_min, n_max].  The eigensolve runs once (the effective
// Hamiltonian does not depend on N); per-N work is fanned over `jobs`
// threads with ordered, deterministic assembly.  Ties in T2 are broken
// toward smaller N.
SweepResult sweep_t2(const QubitSpec& spec, const NoiseSpec& noise, int n_min,
                     int n_max, int jobs = 1);

}  // namespace fluxo
