#include "wfpr/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wfpr {

AlignmentResult align_and_distance(const Signal& x, const Signal& z) {
  if (x.size() != z.size()) throw std::invalid_argument("align_and_distance: dimension mismatch");
  if (x.norm() == 0.0) throw std::invalid_argument("align_and_distance: ||x|| must be > 0");

  const Cplx p = x.dot(z);  // sum conj(x_j) z_j
  AlignmentResult out;
  out.phase = (p == Cplx(0.0, 0.0)) ? Cplx(1.0, 0.0) : p / std::abs(p);
  out.h = std::conj(out.phase) * z - x;
  out.distance = out.h.norm();
  return out;
}

double nrmse(const Signal& x, const Signal& z) {
  return align_and_distance(x, z).distance / x.norm();
}

namespace {

void check_dims(const Signal& z, const MeasurementEnsemble& A, const ObservationSet& obs) {
  if (A.n() != z.size() || obs.m() != A.m()) {
    throw std::invalid_argument("objective/gradient: dimension mismatch");
  }
}

}  // namespace

double objective(const Signal& z, const MeasurementEnsemble& A,
                 const ObservationSet& obs, ModelKind model) {
  check_dims(z, A, obs);
  const RealVec intens = intensities(A, z);
  const double m = static_cast<double>(A.m());
  double acc = 0.0;
  if (model == ModelKind::PoissonMLE) {
    for (Eigen::Index j = 0; j < A.m(); ++j) {
      const double u = intens(j) + obs.background(j);
      if (!(u > 0.0)) {
        throw std::domain_error("objective: singular evaluation, nonpositive log argument at index " +
                                std::to_string(j));
      }
      acc += u - obs.observed(j) * std::log(u);
    }
    return acc / m;
  }
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    const double r = intens(j) - (obs.observed(j) - obs.background(j));
    acc += r * r;
  }
  return acc / (2.0 * m);
}

Signal gradient(const Signal& z, const MeasurementEnsemble& A,
                const ObservationSet& obs, ModelKind model) {
  check_dims(z, A, obs);
  const Eigen::VectorXcd az = A.rows * z;
  const RealVec intens = az.cwiseAbs2();
  Eigen::VectorXcd weighted(A.m());
  if (model == ModelKind::PoissonMLE) {
    for (Eigen::Index j = 0; j < A.m(); ++j) {
      const double u = intens(j) + obs.background(j);
      if (!(u > 0.0)) {
        throw std::domain_error("gradient: singular evaluation, nonpositive log argument at index " +
                                std::to_string(j));
      }
      weighted(j) = (1.0 - obs.observed(j) / u) * az(j);
    }
  } else {
    for (Eigen::Index j = 0; j < A.m(); ++j) {
      weighted(j) = (intens(j) - (obs.observed(j) - obs.background(j))) * az(j);
    }
  }
  return (A.rows.adjoint() * weighted) / static_cast<double>(A.m());
}

Signal gradient_single(const Signal& z, const MeasurementEnsemble& A,
                       const ObservationSet& obs, Eigen::Index j) {
  check_dims(z, A, obs);
  if (j < 0 || j >= A.m()) throw std::out_of_range("gradient_single: index out of range");
  const Cplx s = A.rows.row(j) * z;
  const double u = std::norm(s) + obs.background(j);
  if (!(u > 0.0)) {
    throw std::domain_error("gradient_single: singular evaluation, nonpositive log argument at index " +
                            std::to_string(j));
  }
  const double w = 1.0 - obs.observed(j) / u;
  return A.rows.row(j).adjoint() * (w * s);
}

double step_size(const StepSizeRule& rule, long iter, const Signal& z,
                 const Signal& grad, const MeasurementEnsemble& A,
                 const ObservationSet& obs, double /*z0_norm*/) {
  if (std::holds_alternative<HeuristicStep>(rule)) {
    const auto& h = std::get<HeuristicStep>(rule);
    if (iter < 1) throw std::invalid_argument("step_size: heuristic rule needs iter >= 1");
    return std::min(1.0 - std::exp(-static_cast<double>(iter) / h.t0), h.cap);
  }
  if (std::holds_alternative<ConstantStep>(rule)) {
    return std::get<ConstantStep>(rule).mu;
  }
  const double g2 = grad.squaredNorm();
  if (g2 == 0.0) throw std::invalid_argument("step_size: FisherInfo needs grad != 0");
  const Eigen::VectorXcd az = A.rows * z;
  const RealVec intens = az.cwiseAbs2();
  const Eigen::VectorXcd ag = A.rows * grad;
  double denom = 0.0;
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    const double d = intens(j) / (intens(j) + obs.background(j));
    denom += d * std::norm(ag(j));
  }
  return static_cast<double>(A.m()) * g2 / denom;
}

const char* model_name(ModelKind model) {
  return model == ModelKind::PoissonMLE ? "poisson" : "gaussian";
}

std::string rule_name(const StepSizeRule& rule) {
  if (std::holds_alternative<HeuristicStep>(rule)) return "heuristic";
  if (std::holds_alternative<ConstantStep>(rule)) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "constant:%g", std::get<ConstantStep>(rule).mu);
    return buf;
  }
  return "fisher";
}

}  // namespace wfpr
