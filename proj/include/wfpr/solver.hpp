#pragma once

#include <variant>
#include <vector>

#include "wfpr/objective.hpp"

namespace wfpr {

struct SolverConfig {
  ModelKind model = ModelKind::PoissonMLE;
  StepSizeRule rule = ConstantStep{0.2};
  long max_iters = 500;
  double nrmse_tol = 0.0;  // 0 disables NRMSE stopping (oracle-free runs)
  long record_every = 1;
  double iwf_mu_scale = 0.2;  // IWF step is iwf_mu_scale / n
};

struct TraceRecord {
  long iter;
  double nrmse;      // NaN when no ground truth is supplied
  double objective;
  double step;       // step applied at this iterate; 0 on the terminal record
};

struct SolverTrace {
  std::vector<TraceRecord> iterations;
  Signal final_z;
  bool converged = false;
  long total_iters = 0;
};

/// z0 = x + rho*||x||*u with u a random complex unit direction, so
/// dist(z0, x) <= rho*||x||. Requires 0 < rho < 1.
struct OraclePerturbation {
  double rho = 1.0 / 15.0;
};

/// Leading eigenvector of (1/m) sum (y_j - b_j) a_j a_j^* by power iteration,
/// scaled so ||z0||^2 = mean positive part of (y - b) / scale^2 (the scale
/// division undoes the ensemble calibration).
struct PowerSpectral {
  long iters = 50;
};

using Initializer = std::variant<OraclePerturbation, PowerSpectral>;

Signal initialize(const Signal& x, const MeasurementEnsemble& A,
                  const ObservationSet& obs, const Initializer& init,
                  RngStream& rng);

/// Full-batch Wirtinger flow z_{k+1} = z_k - mu_k * grad f(z_k). The ground
/// truth x is used only for NRMSE records and stopping; pass an empty x for
/// oracle-free runs. GaussianLS updates divide the step by
/// ||z0||^2 * scale^4, which reproduces the reference WF update on the
/// de-calibrated ensemble.
SolverTrace wf_solve(const Signal& x, const MeasurementEnsemble& A,
                     const ObservationSet& obs, const Signal& z0,
                     const SolverConfig& cfg);

/// Incremental WF: one uniformly sampled measurement per step, fixed step
/// iwf_mu_scale / n, PoissonMLE gradient terms.
SolverTrace iwf_solve(const Signal& x, const MeasurementEnsemble& A,
                      const ObservationSet& obs, const Signal& z0,
                      const SolverConfig& cfg, RngStream& rng);

}  // namespace wfpr
