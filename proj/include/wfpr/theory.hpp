#pragma once

#include <string>
#include <vector>

#include "wfpr/measurement.hpp"

namespace wfpr {

/// Boundary constants of the curvature parameter region, in closed form.
double region_rho1();  // (2*sqrt(76015) - 276)/2477
double region_t2();    // (8075 - sqrt(45678865))/990
double region_rho2();  // (2*sqrt(39) - 12)/3

/// u_smo = (1 + 1/(2 sqrt(alpha1))) (1 + delta).
double smoothness_constant(double alpha1, double delta);

struct CurvatureConstants {
  double alpha1, alpha2, rho, delta;
  double U;        // (1+rho)^2 + alpha2
  double L1;       // (1-rho)^2 + alpha1
  double L2;       // alpha1
  double phi1;     // (1-6rho)/(4U) - rho^2/(16 L1) - delta/4
  double phi2;     // (9+16rho^2)/(32U) - 3/(32 L2) - delta/4
  double psi;      // 63/(128U) - 9/(128 L2)
  double varphi;   // 81 U rho^2 / (U^2 (7 + 16 U psi))
  double lcur_hat; // min{(phi1+phi2-varphi)/4, (2-3rho+rho^2)/U * (1-delta)}
  double u_smo;
  bool in_region;
  double rho1, t2, rho2;
};

/// Evaluates the closed-form curvature constants and the admissible-region
/// predicate. Requires 0 < alpha1 <= alpha2, delta >= 0 and 0 < rho <= rho2;
/// rho beyond rho2 is outside the theory's range and throws.
CurvatureConstants curvature_constants(double alpha1, double alpha2, double rho,
                                       double delta);

/// Ratios measured on random probes z = x + r*u, r uniform in (0, rho||x||],
/// u a random complex unit direction. Gradients are divided by scale^2 so the
/// ratios live in the raw E[aa*] = I geometry of the lemmas.
struct ProbeReport {
  double max_smoothness_ratio = 0.0;  // max ||grad f(z)|| / dist(x,z)
  double min_curvature_ratio = 0.0;   // min Re<grad f(z), z - x e^{i phi}> / dist^2
  double min_normalized_intensity = 0.0;  // min_j |a_j^* x| / ||x||, de-scaled
  long probes = 0;
  double rho = 0.0;
  bool dominance_ok = true;  // curvature ratio <= smoothness ratio on every probe
};

ProbeReport empirical_smoothness(const Signal& x, const MeasurementEnsemble& A,
                                 const ObservationSet& obs, double rho,
                                 long probes, RngStream& rng);

ProbeReport empirical_curvature(const Signal& x, const MeasurementEnsemble& A,
                                const ObservationSet& obs, double rho,
                                long probes, RngStream& rng);

struct ConcentrationCheck {
  std::string name;
  double measured;
  double lower;
  double upper;
  bool pass;
};

/// Lemma-style concentration sums for a fixed pair (x, h~): the two-sided
/// norm bound for u = x and u = h~, plus the five indicator-weighted sums.
/// Preconditions: ||x|| = ||h~|| = 1; h~ is rotated internally so Im(h~^* x)=0;
/// h~ = +-x is an excluded direction. Sums are evaluated on the de-scaled
/// ensemble.
std::vector<ConcentrationCheck> empirical_concentration(const Signal& x,
                                                        const Signal& h_tilde,
                                                        const MeasurementEnsemble& A,
                                                        double delta);

/// Max over sampled pairs (h1, h2), ||h1|| = ||h2|| = s*||x||, of
/// |Re<grad f(x+h1) - grad f(x+h2), h2>| / (s * ||h1 - h2||), de-scaled.
/// Pairs with h1 == h2 are skipped.
double empirical_gradient_lipschitz(const Signal& x, const MeasurementEnsemble& A,
                                    const ObservationSet& obs, double s,
                                    long pairs, RngStream& rng);

}  // namespace wfpr
