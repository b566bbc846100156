#include "wfpr/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wfpr {

RealVec intensities(const MeasurementEnsemble& A, const Signal& z) {
  if (A.n() != z.size()) throw std::invalid_argument("intensities: dimension mismatch");
  return (A.rows * z).cwiseAbs2();
}

Signal generate_signal(Eigen::Index n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("generate_signal: invalid dimension n = 0");
  Signal x(n);
  for (Eigen::Index k = 0; k < n; ++k) x(k) = rng.complex_gaussian();
  if (x.norm() == 0.0) {
    // Measure-zero; retry keeps the nonzero-norm contract.
    for (Eigen::Index k = 0; k < n; ++k) x(k) = rng.complex_gaussian();
  }
  return x;
}

MeasurementEnsemble generate_measurements(const Signal& x, Eigen::Index m,
                                          double target_mean_intensity,
                                          RngStream& rng) {
  if (m < 1) throw std::invalid_argument("generate_measurements: m must be >= 1");
  if (!(target_mean_intensity > 0.0)) {
    throw std::invalid_argument("generate_measurements: target intensity must be > 0");
  }
  if (x.norm() == 0.0) throw std::invalid_argument("generate_measurements: ||x|| must be > 0");

  MeasurementEnsemble A;
  A.rows.resize(m, x.size());
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < x.size(); ++k) A.rows(j, k) = rng.complex_gaussian();
  }
  const double raw_mean = (A.rows * x).cwiseAbs2().mean();
  if (raw_mean == 0.0) {
    throw std::domain_error("generate_measurements: degenerate ensemble, mean raw intensity is 0");
  }
  A.scale = std::sqrt(target_mean_intensity / raw_mean);
  A.rows *= A.scale;
  A.seed = rng.fingerprint();
  return A;
}

RealVec sample_background(const RealVec& clean_intensity, double alpha1,
                          double alpha2, RngStream& rng) {
  if (!(alpha1 > 0.0) || alpha1 > alpha2) {
    throw std::invalid_argument("sample_background: need 0 < alpha1 <= alpha2");
  }
  const double log_a1 = std::log(alpha1);
  const double log_a2 = std::log(alpha2);
  RealVec b(clean_intensity.size());
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    if (!(clean_intensity(j) > 0.0)) {
      throw std::domain_error("sample_background: degenerate clean intensity at index " +
                              std::to_string(j));
    }
    const double s = std::exp(rng.uniform() * (log_a2 - log_a1) + log_a1);
    b(j) = s * clean_intensity(j);
  }
  return b;
}

ObservationSet build_observations(const Signal& x, const MeasurementEnsemble& A,
                                  const RealVec& background, double eta_level,
                                  RngStream& rng) {
  if (A.n() != x.size() || background.size() != A.m()) {
    throw std::invalid_argument("build_observations: dimension mismatch");
  }
  if (!(eta_level >= 0.0)) {
    throw std::invalid_argument("build_observations: eta_level must be >= 0");
  }

  ObservationSet obs;
  obs.eta_level = eta_level;
  obs.clean_intensity = intensities(A, x);
  obs.background = background;
  obs.noise = RealVec::Zero(A.m());

  obs.alpha1 = std::numeric_limits<double>::infinity();
  obs.alpha2 = 0.0;
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    if (!(background(j) > 0.0)) {
      throw std::invalid_argument("build_observations: background must be > 0 elementwise");
    }
    const double ratio = background(j) / obs.clean_intensity(j);
    obs.alpha1 = std::min(obs.alpha1, ratio);
    obs.alpha2 = std::max(obs.alpha2, ratio);
    if (eta_level > 0.0) {
      const double clean = obs.clean_intensity(j);
      const auto count = sample_poisson(clean, rng);
      obs.noise(j) = eta_level * (static_cast<double>(count) - clean);
    }
  }

  obs.observed.resize(A.m());
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    obs.observed(j) = obs.clean_intensity(j) + obs.background(j) + obs.noise(j);
  }
  return obs;
}

}  // namespace wfpr
