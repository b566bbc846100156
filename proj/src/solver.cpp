#include "wfpr/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wfpr {

namespace {

Signal random_unit_direction(Eigen::Index n, RngStream& rng) {
  Signal u(n);
  for (Eigen::Index k = 0; k < n; ++k) u(k) = rng.complex_gaussian();
  return u / u.norm();
}

}  // namespace

Signal initialize(const Signal& x, const MeasurementEnsemble& A,
                  const ObservationSet& obs, const Initializer& init,
                  RngStream& rng) {
  if (std::holds_alternative<OraclePerturbation>(init)) {
    const double rho = std::get<OraclePerturbation>(init).rho;
    if (!(rho > 0.0) || rho >= 1.0) {
      throw std::invalid_argument("initialize: OraclePerturbation needs 0 < rho < 1");
    }
    if (x.norm() == 0.0) throw std::invalid_argument("initialize: ||x|| must be > 0");
    return x + rho * x.norm() * random_unit_direction(x.size(), rng);
  }

  const auto& ps = std::get<PowerSpectral>(init);
  const Eigen::Index n = A.n();
  const RealVec w = obs.observed - obs.background;
  // Power iteration on Y = (1/m) A^H diag(w) A.
  Signal v = random_unit_direction(n, rng);
  for (long it = 0; it < ps.iters; ++it) {
    Eigen::VectorXcd av = A.rows * v;
    for (Eigen::Index j = 0; j < A.m(); ++j) av(j) *= w(j);
    v = A.rows.adjoint() * av;
    const double nv = v.norm();
    if (nv == 0.0) break;
    v /= nv;
  }
  const double lambda = w.cwiseMax(0.0).mean() / (A.scale * A.scale);
  return std::sqrt(lambda) * v;
}

namespace {

struct Evaluation {
  Eigen::VectorXcd az;
  RealVec intens;
  Signal grad;
  double grad_norm2;
  double objective_value;
};

Evaluation evaluate(const Signal& z, const MeasurementEnsemble& A,
                    const ObservationSet& obs, ModelKind model) {
  Evaluation ev;
  ev.az = A.rows * z;
  ev.intens = ev.az.cwiseAbs2();
  const double m = static_cast<double>(A.m());
  Eigen::VectorXcd weighted(A.m());
  double acc = 0.0;
  if (model == ModelKind::PoissonMLE) {
    for (Eigen::Index j = 0; j < A.m(); ++j) {
      const double u = ev.intens(j) + obs.background(j);
      if (!(u > 0.0)) {
        throw std::domain_error("wf_solve: singular evaluation, nonpositive log argument at index " +
                                std::to_string(j));
      }
      weighted(j) = (1.0 - obs.observed(j) / u) * ev.az(j);
      acc += u - obs.observed(j) * std::log(u);
    }
    ev.objective_value = acc / m;
  } else {
    for (Eigen::Index j = 0; j < A.m(); ++j) {
      const double r = ev.intens(j) - (obs.observed(j) - obs.background(j));
      weighted(j) = r * ev.az(j);
      acc += r * r;
    }
    ev.objective_value = acc / (2.0 * m);
  }
  ev.grad = (A.rows.adjoint() * weighted) / m;
  ev.grad_norm2 = ev.grad.squaredNorm();
  return ev;
}

double fisher_step(const Evaluation& ev, const MeasurementEnsemble& A,
                   const ObservationSet& obs) {
  const Eigen::VectorXcd ag = A.rows * ev.grad;
  double denom = 0.0;
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    denom += ev.intens(j) / (ev.intens(j) + obs.background(j)) * std::norm(ag(j));
  }
  return static_cast<double>(A.m()) * ev.grad_norm2 / denom;
}

double rule_step(const StepSizeRule& rule, long t, const Evaluation& ev,
                 const MeasurementEnsemble& A, const ObservationSet& obs) {
  if (std::holds_alternative<HeuristicStep>(rule)) {
    const auto& h = std::get<HeuristicStep>(rule);
    return std::min(1.0 - std::exp(-static_cast<double>(t) / h.t0), h.cap);
  }
  if (std::holds_alternative<ConstantStep>(rule)) return std::get<ConstantStep>(rule).mu;
  return fisher_step(ev, A, obs);
}

}  // namespace

SolverTrace wf_solve(const Signal& x, const MeasurementEnsemble& A,
                     const ObservationSet& obs, const Signal& z0,
                     const SolverConfig& cfg) {
  const bool have_oracle = x.size() > 0;
  if (have_oracle && x.size() != A.n()) throw std::invalid_argument("wf_solve: dimension mismatch");
  if (z0.size() != A.n()) throw std::invalid_argument("wf_solve: z0 dimension mismatch");
  if (cfg.max_iters < 1) throw std::invalid_argument("wf_solve: max_iters must be >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("wf_solve: record_every must be >= 1");

  const double gauss_divisor =
      z0.squaredNorm() * A.scale * A.scale * A.scale * A.scale;

  SolverTrace trace;
  Signal z = z0;

  for (long k = 0;; ++k) {
    const Evaluation ev = evaluate(z, A, obs, cfg.model);
    const double nr = have_oracle ? nrmse(x, z) : std::numeric_limits<double>::quiet_NaN();

    const bool hit_tol = have_oracle && cfg.nrmse_tol > 0.0 && nr <= cfg.nrmse_tol;
    const bool stationary = ev.grad_norm2 == 0.0;
    const bool stop = hit_tol || stationary || k == cfg.max_iters;

    double step = 0.0;
    if (!stop) step = rule_step(cfg.rule, k + 1, ev, A, obs);

    if (stop || k % cfg.record_every == 0) {
      trace.iterations.push_back({k, nr, ev.objective_value, step});
    }
    if (stop) {
      trace.final_z = z;
      trace.total_iters = k;
      trace.converged = have_oracle && !std::isnan(nr) && nr <= cfg.nrmse_tol;
      break;
    }

    if (cfg.model == ModelKind::GaussianLS) {
      z -= (step / gauss_divisor) * ev.grad;
    } else {
      z -= step * ev.grad;
    }
  }
  return trace;
}

SolverTrace iwf_solve(const Signal& x, const MeasurementEnsemble& A,
                      const ObservationSet& obs, const Signal& z0,
                      const SolverConfig& cfg, RngStream& rng) {
  const bool have_oracle = x.size() > 0;
  if (have_oracle && x.size() != A.n()) throw std::invalid_argument("iwf_solve: dimension mismatch");
  if (z0.size() != A.n()) throw std::invalid_argument("iwf_solve: z0 dimension mismatch");
  if (cfg.max_iters < 1) throw std::invalid_argument("iwf_solve: max_iters must be >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("iwf_solve: record_every must be >= 1");

  const double mu = cfg.iwf_mu_scale / static_cast<double>(A.n());
  const std::uint64_t m = static_cast<std::uint64_t>(A.m());

  SolverTrace trace;
  Signal z = z0;

  for (long s = 0;; ++s) {
    const bool due = s % cfg.record_every == 0;
    double nr = std::numeric_limits<double>::quiet_NaN();
    bool hit_tol = false;
    if (due || have_oracle) {
      nr = have_oracle ? nrmse(x, z) : nr;
      hit_tol = have_oracle && cfg.nrmse_tol > 0.0 && nr <= cfg.nrmse_tol;
    }
    const bool stop = hit_tol || s == cfg.max_iters;
    if (due || stop) {
      trace.iterations.push_back({s, nr, objective(z, A, obs, ModelKind::PoissonMLE),
                                  stop ? 0.0 : mu});
    }
    if (stop) {
      trace.final_z = z;
      trace.total_iters = s;
      trace.converged = have_oracle && !std::isnan(nr) && nr <= cfg.nrmse_tol;
      break;
    }

    const Eigen::Index j = static_cast<Eigen::Index>(rng.uniform_index(m));
    const Cplx sj = A.rows.row(j) * z;
    const double u = std::norm(sj) + obs.background(j);
    if (!(u > 0.0)) {
      throw std::domain_error("iwf_solve: singular evaluation, nonpositive log argument at index " +
                              std::to_string(j));
    }
    const double w = 1.0 - obs.observed(j) / u;
    z -= (mu * w * sj) * A.rows.row(j).adjoint();
  }
  return trace;
}

}  // namespace wfpr
