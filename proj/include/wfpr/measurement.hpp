#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "wfpr/rng.hpp"

namespace wfpr {

using Cplx = std::complex<double>;
using Signal = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Calibrated complex Gaussian sensing ensemble. Row j stores a_j^*, so the
/// j-th measurement of z is (rows * z)(j). The stored rows already include
/// the calibration factor `scale`.
struct MeasurementEnsemble {
  Eigen::MatrixXcd rows;
  double scale = 1.0;
  std::uint64_t seed = 0;

  Eigen::Index m() const { return rows.rows(); }
  Eigen::Index n() const { return rows.cols(); }
};

/// One synthetic acquisition: y = clean + background + noise, built so the
/// identity holds at bit level. eta_level == 0 forces noise == 0.
struct ObservationSet {
  RealVec clean_intensity;
  RealVec background;
  RealVec noise;
  RealVec observed;
  double eta_level = 0.0;
  double alpha1 = 1.0;  // realized min of background ./ clean_intensity
  double alpha2 = 1.0;  // realized max of background ./ clean_intensity

  Eigen::Index m() const { return observed.size(); }
};

/// |A z|^2 elementwise. Shared by observation synthesis and the objective so
/// noiseless data evaluated at z = x cancels exactly.
RealVec intensities(const MeasurementEnsemble& A, const Signal& z);

/// i.i.d. entries with real/imag parts ~ N(0, 1/2), so E|x_k|^2 = 1.
Signal generate_signal(Eigen::Index n, RngStream& rng);

/// Raw CN(0, I) rows scaled by one constant c so that the realized mean of
/// |a_j^* x|^2 equals target_mean_intensity to machine precision.
MeasurementEnsemble generate_measurements(const Signal& x, Eigen::Index m,
                                          double target_mean_intensity,
                                          RngStream& rng);

/// b_j = s_j * clean_j with log s_j uniform on [log alpha1, log alpha2];
/// alpha1 = alpha2 = 1 returns clean exactly.
RealVec sample_background(const RealVec& clean_intensity, double alpha1,
                          double alpha2, RngStream& rng);

/// Poisson-noised observations. The noise is the eta-scaled centered Poisson
/// fluctuation of the clean intensity, eta*(Poisson(clean_j) - clean_j); the
/// known background contributes its exact mean.
ObservationSet build_observations(const Signal& x, const MeasurementEnsemble& A,
                                  const RealVec& background, double eta_level,
                                  RngStream& rng);

}  // namespace wfpr
