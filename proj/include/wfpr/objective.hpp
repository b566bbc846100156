#pragma once

#include <variant>

#include "wfpr/measurement.hpp"

namespace wfpr {

enum class ModelKind { PoissonMLE, GaussianLS };

struct HeuristicStep {
  double t0 = 330.0;
  double cap = 0.2;
};
struct ConstantStep {
  double mu = 0.2;
};
struct FisherInfoStep {};

using StepSizeRule = std::variant<HeuristicStep, ConstantStep, FisherInfoStep>;

/// Optimal global phase between x and z: phase = e^{i phi(z)} maximizing
/// Re(e^{-i phi} <x, z>), h = conj(phase)*z - x, distance = ||h||. When
/// <x, z> = 0 the phase ties and is broken to 1.
struct AlignmentResult {
  Cplx phase;
  double distance;
  Signal h;
};

AlignmentResult align_and_distance(const Signal& x, const Signal& z);

/// dist(x, z) / ||x||.
double nrmse(const Signal& x, const Signal& z);

/// PoissonMLE: (1/m) sum(|a_j^* z|^2 + b_j - y_j log(|a_j^* z|^2 + b_j)).
/// GaussianLS: (1/(2m)) sum(|a_j^* z|^2 - (y_j - b_j))^2; the 1/2 keeps the
/// value consistent with the gradient convention below.
double objective(const Signal& z, const MeasurementEnsemble& A,
                 const ObservationSet& obs, ModelKind model);

/// Wirtinger gradient (conjugate form): for any direction d the real
/// directional derivative of the objective equals 2*Re(<gradient, d>).
/// PoissonMLE: (1/m) sum (1 - y_j/(|a_j^* z|^2 + b_j)) a_j a_j^* z.
/// GaussianLS: (1/m) sum (|a_j^* z|^2 - (y_j - b_j)) a_j a_j^* z.
Signal gradient(const Signal& z, const MeasurementEnsemble& A,
                const ObservationSet& obs, ModelKind model);

/// Single-term Poisson gradient without the 1/m factor; the average over all
/// j equals gradient(..., PoissonMLE).
Signal gradient_single(const Signal& z, const MeasurementEnsemble& A,
                       const ObservationSet& obs, Eigen::Index j);

/// Step-size rules of the step-size study. `iter` is the 1-based iteration
/// index t for the heuristic ramp. FisherInfo evaluates
///   mu = m * ||g||^2 / ((A g)^* D (A g)),  D = diag(|A z|^2 ./ (|A z|^2 + b));
/// the m factor translates the per-measurement-sum form of the quotient to
/// our averaged gradient. z0_norm is accepted for signature stability; the
/// current rules do not consume it (the GaussianLS normalization lives in the
/// solver).
double step_size(const StepSizeRule& rule, long iter, const Signal& z,
                 const Signal& grad, const MeasurementEnsemble& A,
                 const ObservationSet& obs, double z0_norm);

const char* model_name(ModelKind model);
std::string rule_name(const StepSizeRule& rule);

}  // namespace wfpr
