#include "fluxo/oracle.hpp"

#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fluxo {

int FullCircuitModel::dim() const {
  int d = 1;
  for (int i = 0; i < n; ++i) d *= 2 * n_max + 1;
  return d;
}

void FullCircuitModel::validate() const {
  if (n < 2 || n > 3)
    throw std::invalid_argument("FullCircuitModel: n must be 2 or 3");
  if (n_max < 1 || n_max > 12)
    throw std::invalid_argument("FullCircuitModel: n_max must be in [1, 12]");
  if (capacitance.rows() != n + 1 || capacitance.cols() != n + 1)
    throw std::invalid_argument("FullCircuitModel: capacitance must be (N+1)^2");
  if (!capacitance.isApprox(capacitance.transpose(), 1e-12))
    throw std::invalid_argument("FullCircuitModel: capacitance not symmetric");
  if (static_cast<int>(charge_offsets.size()) != n + 1)
    throw std::invalid_argument("FullCircuitModel: need N+1 charge offsets");
  if (!(e_ja > 0.0) || e_jb < 0.0)
    throw std::invalid_argument("FullCircuitModel: bad Josephson energies");
}

FullCircuitModel make_circuit(int n, double e_ja, double e_jb, double e_ca,
                              double e_cb, int n_max, double e_cda,
                              double e_cdb) {
  if (!(e_ca > 0.0) || !(e_cb > 0.0))
    throw std::invalid_argument("make_circuit: charging energies must be > 0");
  FullCircuitModel m;
  m.n = n;
  m.e_ja = e_ja;
  m.e_jb = e_jb;
  m.n_max = n_max;
  m.capacitance = Eigen::MatrixXd::Zero(n + 1, n + 1);

  // Array junction capacitors: branch phase Theta_i.
  for (int i = 1; i <= n; ++i)
    m.capacitance(i, i) += 1.0 / e_ca;
  // Black-sheep capacitor: branch phase -(Theta_1 + ... + Theta_N).
  Eigen::VectorXd bs = Eigen::VectorXd::Zero(n + 1);
  for (int i = 1; i <= n; ++i) bs(i) = 1.0;
  m.capacitance += (1.0 / e_cb) * bs * bs.transpose();
  // Optional ground capacitors: island k phase = tau + Theta_1 + .. + Theta_k.
  if (e_cda > 0.0 || e_cdb > 0.0) {
    for (int k = 0; k <= n; ++k) {
      const double e_d = (k == 0) ? e_cdb : e_cda;
      if (!(e_d > 0.0)) continue;
      Eigen::VectorXd w = Eigen::VectorXd::Zero(n + 1);
      w(0) = 1.0;
      for (int i = 1; i <= k; ++i) w(i) = 1.0;
      m.capacitance += (1.0 / e_d) * w * w.transpose();
    }
  }

  m.charge_offsets.assign(n + 1, 0.5);
  m.charge_offsets[0] = 0.0;  // Q_tau
  return m;
}

FullCircuitModel make_matched_circuit(const QubitSpec& spec, int n, int n_max,
                                      double e_cda, double e_cdb) {
  spec.validate();
  const DerivedScales scales = derive_shared_scales(spec);
  const ArrayJunctionParams ap = array_params(scales, spec, n);
  FullCircuitModel m = make_circuit(n, ap.e_ja, spec.e_j, ap.e_ca,
                                    scales.e_cb, n_max, e_cda, e_cdb);
  m.flux_phi = spec.flux_phi;
  return m;
}

ChargeBasisHamiltonian build_full_hamiltonian(const FullCircuitModel& model) {
  model.validate();
  const int n = model.n;
  const int span = 2 * model.n_max + 1;

  // Charging-energy weight matrix over the array modes, with the conserved
  // tau charge held at Q_tau/2.  Without ground capacitors the tau row is
  // empty and only the Theta block enters.
  Eigen::MatrixXd w;
  const bool has_tau = model.capacitance(0, 0) > 0.0;
  if (has_tau) {
    w = model.capacitance.inverse();
  } else {
    w = Eigen::MatrixXd::Zero(n + 1, n + 1);
    w.block(1, 1, n, n) = model.capacitance.block(1, 1, n, n).inverse();
  }

  ChargeBasisHamiltonian h;
  h.n = n;
  h.n_max = model.n_max;
  h.dim = model.dim();
  h.hop = -model.e_ja / 2.0;
  h.bs_hop = -(model.e_jb / 2.0) *
             std::exp(std::complex<double>(0.0, -model.flux_phi));

  const double x_tau = model.charge_offsets[0] / 2.0;
  h.diag.resize(h.dim);
  std::vector<double> x(n);
  for (int d = 0; d < h.dim; ++d) {
    int rem = d;
    for (int i = n - 1; i >= 0; --i) {
      x[i] = (rem % span) - model.n_max + model.charge_offsets[i + 1] / 2.0;
      rem /= span;
    }
    double kin = w(0, 0) * x_tau * x_tau;
    for (int i = 0; i < n; ++i) {
      kin += 2.0 * w(0, i + 1) * x_tau * x[i];
      for (int j = 0; j < n; ++j) kin += w(i + 1, j + 1) * x[i] * x[j];
    }
    // Constant offsets from E_J (1 - cos ...) keep the zero of energy
    // aligned with the Josephson potential minimum count.
    h.diag[d] = 4.0 * kin + n * model.e_ja + model.e_jb;
  }
  return h;
}

void ChargeBasisHamiltonian::apply(const Eigen::VectorXcd& xv,
                                   Eigen::VectorXcd& yv) const {
  const int span = 2 * n_max + 1;
  yv.resize(dim);
  for (int d = 0; d < dim; ++d) yv(d) = diag[d] * xv(d);

  int stride = 1;
  for (int i = n - 1; i >= 0; --i) {
    const int block = stride * span;
    for (int base = 0; base < dim; base += block)
      for (int off = 0; off < block - stride; ++off) {
        const int d = base + off;
        yv(d + stride) += hop * xv(d);
        yv(d) += hop * xv(d + stride);
      }
    stride *= span;
  }

  // Black sheep: raises every mode charge by one Cooper pair.
  int shift = 0;
  stride = 1;
  for (int i = 0; i < n; ++i) {
    shift += stride;
    stride *= span;
  }
  const std::complex<double> bs_conj = std::conj(bs_hop);
  for (int d = 0; d < dim; ++d) {
    int rem = d;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (rem % span == span - 1) { ok = false; break; }
      rem /= span;
    }
    if (!ok) continue;
    yv(d + shift) += bs_hop * xv(d);
    yv(d) += bs_conj * xv(d + shift);
  }
}

Eigen::MatrixXcd ChargeBasisHamiltonian::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim), col(dim);
  for (int j = 0; j < dim; ++j) {
    e(j) = 1.0;
    apply(e, col);
    m.col(j) = col;
    e(j) = 0.0;
  }
  return m;
}

namespace {

// Lanczos with full reorthogonalization; deterministic fixed start vector.
std::vector<double> lanczos_lowest(const ChargeBasisHamiltonian& h, int k,
                                   int max_iter) {
  const int dim = h.dim;
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next_real = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  };

  std::vector<Eigen::VectorXcd> basis;
  Eigen::VectorXcd v(dim), wv(dim);
  for (int i = 0; i < dim; ++i) v(i) = next_real();
  v.normalize();

  std::vector<double> alpha, beta;
  std::vector<double> prev_ritz;
  for (int it = 0; it < max_iter; ++it) {
    basis.push_back(v);
    h.apply(v, wv);
    const double a = std::real(v.dot(wv));
    alpha.push_back(a);
    wv -= a * v;
    if (it > 0) wv -= beta.back() * basis[it - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) wv -= u.dot(wv) * u;
    const double b = wv.norm();

    if (it + 1 >= 2 * k && (it % 5 == 0 || b < 1e-12 || it + 1 == max_iter)) {
      std::vector<double> d(alpha), e(beta);
      e.resize(d.size(), 0.0);
      const lapack_int info =
          LAPACKE_dsterf(static_cast<lapack_int>(d.size()), d.data(), e.data());
      if (info != 0) throw std::runtime_error("dsterf failed in Lanczos");
      std::vector<double> ritz(d.begin(), d.begin() + k);
      if (!prev_ritz.empty()) {
        bool done = true;
        for (int i = 0; i < k; ++i)
          done = done && std::abs(ritz[i] - prev_ritz[i]) <
                             1e-11 * std::max(1.0, std::abs(ritz[i]));
        if (done) return ritz;
      }
      prev_ritz = ritz;
    }

    if (b < 1e-12) {
      // Invariant subspace: restart with a fresh vector orthogonal to the
      // basis built so far.
      for (int i = 0; i < dim; ++i) wv(i) = next_real();
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : basis) wv -= u.dot(wv) * u;
      if (wv.norm() < 1e-12) break;  // space exhausted
      beta.push_back(0.0);
      v = wv / wv.norm();
    } else {
      beta.push_back(b);
      v = wv / b;
    }
  }
  if (!prev_ritz.empty()) return prev_ritz;
  throw std::runtime_error("Lanczos did not converge");
}

}  // namespace

std::vector<double> lowest_levels(const FullCircuitModel& model, int k) {
  const ChargeBasisHamiltonian h = build_full_hamiltonian(model);
  if (k < 1 || k > h.dim) throw std::invalid_argument("lowest_levels: bad k");
  if (h.dim <= 1200) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.dense(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("dense eigensolver failed");
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i) out[i] = solver.eigenvalues()(i);
    return out;
  }
  return lanczos_lowest(h, k, std::min(h.dim, 400));
}

std::vector<std::array<double, 3>> dispersion_scan(
    const FullCircuitModel& model, int island_index,
    const std::vector<double>& q_values) {
  if (island_index < 1 || island_index > model.n)
    throw std::invalid_argument("dispersion_scan: island_index out of range");
  std::vector<std::array<double, 3>> out;
  out.reserve(q_values.size());
  FullCircuitModel m = model;
  for (double q : q_values) {
    m.charge_offsets[island_index] = q;
    const auto w = lowest_levels(m, 2);
    out.push_back({q, w[0], w[1]});
  }
  return out;
}

CosineFit fit_cosine(const std::vector<double>& q,
                     const std::vector<double>& e) {
  if (q.size() != e.size() || q.size() < 4)
    throw std::invalid_argument("fit_cosine: need >= 4 matching points");
  const int m = static_cast<int>(q.size());
  Eigen::MatrixXd a(m, 3);
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = std::cos(M_PI * q[i]);
    a(i, 2) = std::sin(M_PI * q[i]);
    y(i) = e[i];
  }
  const Eigen::Vector3d c =
      a.colPivHouseholderQr().solve(y);
  CosineFit fit;
  fit.offset = c(0);
  fit.amp_cos = c(1);
  fit.amp_sin = c(2);
  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  const double ss_res = (y - a * c).array().square().sum();
  fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace fluxo
