#include "fluxo/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "fluxo/spectrum.hpp"
#include "fluxo/tightbinding.hpp"

namespace fluxo {

std::pair<double, double> rule_of_thumb_band(const DerivedScales& scales,
                                             const QubitSpec& spec) {
  const double root = std::sqrt(spec.e_l / scales.script_e_ca);
  return {5.0 / root, 10.0 / root};
}

int default_n_max(const DerivedScales& scales, const QubitSpec& spec) {
  const auto band = rule_of_thumb_band(scales, spec);
  return std::max(static_cast<int>(std::ceil(4.0 * band.second)), 120);
}

SweepResult sweep_t2(const QubitSpec& spec, const NoiseSpec& noise, int n_min,
                     int n_max, int jobs) {
  spec.validate();
  noise.validate();
  if (n_min < 1 || n_min > n_max)
    throw std::invalid_argument("sweep_t2: need 1 <= n_min <= n_max");
  jobs = std::max(1, jobs);

  const DerivedScales scales = derive_shared_scales(spec);
  const EigenSolution sol = solve_fluxonium_converged(spec);
  const double me = charge_matrix_element(sol);

  const int count = n_max - n_min + 1;
  SweepResult result;
  result.records.resize(count);
  std::tie(result.band_low, result.band_high) = rule_of_thumb_band(scales, spec);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const int idx = next.fetch_add(1);
      if (idx >= count) return;
      const int n = n_min + idx;
      try {
        const ArrayJunctionParams ap = array_params(scales, spec, n);
        const DispersionAmplitudes eps =
            dispersion_amplitudes(spec, sol, scales, n);
        CoherenceRecord rec;
        rec.n = n;
        rec.f01 = sol.f01;
        rec.ratio_ja_ca = ap.ratio;
        rec.eps0 = eps.eps0;
        rec.eps1 = eps.eps1;
        rec.eps_diff = std::abs(eps.eps1 - eps.eps0);
        rec.t_phi = t_phi(eps, noise, n);
        rec.t_one = t_one(spec, sol, me, noise, n);
        rec.t_two = t_two(rec.t_phi, rec.t_one);
        result.records[idx] = rec;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure)
          failure = std::make_exception_ptr(
              SolverError("sweep failed at N=" + std::to_string(n)));
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  int best = 0;
  for (int i = 1; i < count; ++i)
    if (result.records[i].t_two > result.records[best].t_two) best = i;
  result.n_opt = result.records[best].n;
  result.t2_opt = result.records[best].t_two;
  return result;
}

}  // namespace fluxo
