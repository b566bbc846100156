#include "wfpr/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wfpr/objective.hpp"

namespace wfpr {

double region_rho1() { return (2.0 * std::sqrt(76015.0) - 276.0) / 2477.0; }
double region_t2() { return (8075.0 - std::sqrt(45678865.0)) / 990.0; }
double region_rho2() { return (2.0 * std::sqrt(39.0) - 12.0) / 3.0; }

double smoothness_constant(double alpha1, double delta) {
  if (!(alpha1 > 0.0)) throw std::invalid_argument("smoothness_constant: alpha1 must be > 0");
  if (!(delta >= 0.0)) throw std::invalid_argument("smoothness_constant: delta must be >= 0");
  return (1.0 + 1.0 / (2.0 * std::sqrt(alpha1))) * (1.0 + delta);
}

CurvatureConstants curvature_constants(double alpha1, double alpha2, double rho,
                                       double delta) {
  if (!(alpha1 > 0.0) || alpha1 > alpha2) {
    throw std::invalid_argument("curvature_constants: need 0 < alpha1 <= alpha2");
  }
  if (!(delta >= 0.0)) throw std::invalid_argument("curvature_constants: delta must be >= 0");
  const double rho1 = region_rho1();
  const double t2 = region_t2();
  const double rho2 = region_rho2();
  if (!(rho > 0.0) || rho > rho2) {
    throw std::domain_error("curvature_constants: rho out of theory range (0, rho2]");
  }

  CurvatureConstants c;
  c.alpha1 = alpha1;
  c.alpha2 = alpha2;
  c.rho = rho;
  c.delta = delta;
  c.rho1 = rho1;
  c.t2 = t2;
  c.rho2 = rho2;
  c.U = (1.0 + rho) * (1.0 + rho) + alpha2;
  c.L1 = (1.0 - rho) * (1.0 - rho) + alpha1;
  c.L2 = alpha1;
  c.phi1 = (1.0 - 6.0 * rho) / (4.0 * c.U) - rho * rho / (16.0 * c.L1) - delta / 4.0;
  c.phi2 = (9.0 + 16.0 * rho * rho) / (32.0 * c.U) - 3.0 / (32.0 * c.L2) - delta / 4.0;
  c.psi = 63.0 / (128.0 * c.U) - 9.0 / (128.0 * c.L2);
  c.varphi = 81.0 * c.U * rho * rho / (c.U * c.U * (7.0 + 16.0 * c.U * c.psi));
  const double branch_a = (c.phi1 + c.phi2 - c.varphi) / 4.0;
  const double branch_b = (2.0 - 3.0 * rho + rho * rho) / c.U * (1.0 - delta);
  c.lcur_hat = std::min(branch_a, branch_b);
  c.u_smo = smoothness_constant(alpha1, delta);

  const double slope =
      rho <= rho1 ? 3.0 : 3.0 - (3.0 - t2) * (rho - rho1) / (1.0 / 6.0 - rho1);
  const double upper = slope * alpha1 - (rho + 1.0) * (rho + 1.0);
  c.in_region = alpha2 < upper;
  return c;
}

namespace {

Signal random_unit_direction(Eigen::Index n, RngStream& rng) {
  Signal u(n);
  for (Eigen::Index k = 0; k < n; ++k) u(k) = rng.complex_gaussian();
  return u / u.norm();
}

ProbeReport probe_region(const Signal& x, const MeasurementEnsemble& A,
                         const ObservationSet& obs, double rho, long probes,
                         RngStream& rng) {
  if (probes < 1) throw std::invalid_argument("probe_region: probes must be >= 1");
  if (!(rho > 0.0)) throw std::invalid_argument("probe_region: rho must be > 0");

  const double xnorm = x.norm();
  const double descale = 1.0 / (A.scale * A.scale);

  ProbeReport rep;
  rep.probes = probes;
  rep.rho = rho;
  rep.max_smoothness_ratio = 0.0;
  rep.min_curvature_ratio = std::numeric_limits<double>::infinity();
  rep.dominance_ok = true;

  for (long p = 0; p < probes; ++p) {
    const Signal u = random_unit_direction(x.size(), rng);
    const double r = (1.0 - rng.uniform()) * rho * xnorm;  // uniform in (0, rho||x||]
    const Signal z = x + r * u;
    const Signal g = gradient(z, A, obs, ModelKind::PoissonMLE) * descale;
    const AlignmentResult al = align_and_distance(x, z);
    const double smooth = g.norm() / al.distance;
    const double curv =
        (g.dot(z - al.phase * x)).real() / (al.distance * al.distance);
    rep.max_smoothness_ratio = std::max(rep.max_smoothness_ratio, smooth);
    rep.min_curvature_ratio = std::min(rep.min_curvature_ratio, curv);
    if (curv > smooth + 1e-12 * std::abs(smooth)) rep.dominance_ok = false;
  }

  double min_intensity = std::numeric_limits<double>::infinity();
  const Eigen::VectorXcd ax = A.rows * x;
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    min_intensity = std::min(min_intensity, std::abs(ax(j)));
  }
  rep.min_normalized_intensity = min_intensity / (A.scale * xnorm);
  return rep;
}

}  // namespace

ProbeReport empirical_smoothness(const Signal& x, const MeasurementEnsemble& A,
                                 const ObservationSet& obs, double rho,
                                 long probes, RngStream& rng) {
  return probe_region(x, A, obs, rho, probes, rng);
}

ProbeReport empirical_curvature(const Signal& x, const MeasurementEnsemble& A,
                                const ObservationSet& obs, double rho,
                                long probes, RngStream& rng) {
  return probe_region(x, A, obs, rho, probes, rng);
}

std::vector<ConcentrationCheck> empirical_concentration(const Signal& x,
                                                        const Signal& h_tilde,
                                                        const MeasurementEnsemble& A,
                                                        double delta) {
  if (x.size() != h_tilde.size() || x.size() != A.n()) {
    throw std::invalid_argument("empirical_concentration: dimension mismatch");
  }
  if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(h_tilde.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("empirical_concentration: x and h_tilde must be unit vectors");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("empirical_concentration: delta must be > 0");

  // Rotate h~ so that h~^* x is real and nonnegative.
  Signal h = h_tilde;
  const Cplx p = x.dot(h);  // x^H h
  if (std::abs(p) > 0.0) h *= std::conj(p) / std::abs(p);
  const Cplx hx = h.dot(x);
  if (std::abs(hx) > 1.0 - 1e-12) {
    throw std::domain_error("empirical_concentration: h_tilde = +-x is an excluded direction");
  }
  const double re_hx = hx.real();

  const double m = static_cast<double>(A.m());
  Eigen::VectorXcd ax = (A.rows * x) * (1.0 / A.scale);
  Eigen::VectorXcd ah = (A.rows * h) * (1.0 / A.scale);

  double b1x = 0.0, b1h = 0.0, con1 = 0.0, con2 = 0.0, con2p = 0.0, con3 = 0.0,
         con4 = 0.0;
  for (Eigen::Index j = 0; j < A.m(); ++j) {
    const double ax2 = std::norm(ax(j));
    const double ah2 = std::norm(ah(j));
    const double cross = (std::conj(ah(j)) * ax(j)).real();  // Re(h^* a a^* x)
    const bool gt = std::abs(ax(j)) > std::abs(ah(j));
    b1x += ax2;
    b1h += ah2;
    if (gt) {
      con1 += cross;
      con2 += ax2;
      con3 += cross * cross / ax2;
    } else {
      con2p += ax2;
      con4 += cross * cross / ax2;
    }
  }
  b1x /= m;
  b1h /= m;
  con1 /= m;
  con2 /= m;
  con2p /= m;
  con3 /= m;
  con4 /= m;

  const double r2 = re_hx * re_hx;
  std::vector<ConcentrationCheck> checks;
  auto add = [&checks](const std::string& name, double v, double lo, double hi) {
    checks.push_back({name, v, lo, hi, lo <= v && v <= hi});
  };
  add("B1(u=x)", b1x, 1.0 - delta, 1.0 + delta);
  add("B1(u=h)", b1h, 1.0 - delta, 1.0 + delta);
  add("con1", con1, re_hx / 2.0 - delta, re_hx / 2.0 + delta);
  add("con2", con2, 0.5 - delta, 0.75 + delta);
  add("con2'", con2p, 0.25 - delta, 0.5 + delta);
  add("con3", con3, 1.0 / 8.0 + 7.0 / 32.0 * r2 - delta, 0.25 + 0.25 * r2 + delta);
  add("con4", con4, 0.25 + 0.25 * r2 - delta, 3.0 / 8.0 + 9.0 / 32.0 * r2 + delta);
  return checks;
}

double empirical_gradient_lipschitz(const Signal& x, const MeasurementEnsemble& A,
                                    const ObservationSet& obs, double s,
                                    long pairs, RngStream& rng) {
  if (!(s > 0.0) || s >= 1.0) throw std::invalid_argument("empirical_gradient_lipschitz: need 0 < s < 1");
  if (pairs < 1) throw std::invalid_argument("empirical_gradient_lipschitz: pairs must be >= 1");

  const double radius = s * x.norm();
  const double descale = 1.0 / (A.scale * A.scale);
  double worst = 0.0;
  for (long p = 0; p < pairs; ++p) {
    const Signal h1 = radius * random_unit_direction(x.size(), rng);
    const Signal h2 = radius * random_unit_direction(x.size(), rng);
    const double sep = (h1 - h2).norm();
    if (sep == 0.0) continue;
    const Signal g1 = gradient(x + h1, A, obs, ModelKind::PoissonMLE) * descale;
    const Signal g2 = gradient(x + h2, A, obs, ModelKind::PoissonMLE) * descale;
    const double num = std::abs(((g1 - g2).dot(h2)).real());
    worst = std::max(worst, num / (s * sep));
  }
  return worst;
}

}  // namespace wfpr
