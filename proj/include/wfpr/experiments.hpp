#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfpr/solver.hpp"
#include "wfpr/theory.hpp"

namespace wfpr {

enum class ExperimentKind { Trace, Sweep, Background, Compare, Theory, Verify };

std::vector<double> default_m_over_n_grid();  // 3.0 to 5.0 step 0.2

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Sweep;
  long n = 100;
  std::vector<double> m_over_n_grid = default_m_over_n_grid();
  double eta = 1e-3;
  long trials = 100;
  long max_iters = 500;
  StepSizeRule rule = ConstantStep{0.2};
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  std::uint64_t master_seed = 1;
  std::string out_path;
  double rho = 1.0 / 15.0;
  long record_every = 1;
  double target_mean_intensity = 2.0;
  std::optional<double> success_threshold;  // required when eta has no built-in
  std::vector<double> alpha1_grid = {0.01, 0.05, 0.1, 0.5, 1.0};
  bool svg = false;
  long probes = 1000;
  double delta = 0.0;
  std::optional<double> theory_alpha1;
  std::optional<double> theory_alpha2;
  std::optional<double> theory_rho;
};

/// Success threshold: 0.5e-3 for eta = 1e-3, 0.5 for eta = 0.1, otherwise the
/// explicit config value; throws invalid-config when neither applies.
double success_threshold_for(const ExperimentConfig& cfg);

/// One synthetic trial. Signals are normalized to unit norm before the
/// ensemble is calibrated; per-trial randomness comes from substreams 0..4
/// (signal, measurements, background, noise, init) of stream
/// (master_seed, trial).
enum class NoiseKind { Poisson, GaussianComparator };

struct TrialData {
  Signal x;
  MeasurementEnsemble ensemble;
  ObservationSet obs;
  Signal z0;
};

TrialData make_trial(long n, long m, double eta, double alpha1, double alpha2,
                     double rho, double target_mean_intensity,
                     std::uint64_t master_seed, std::uint64_t trial,
                     NoiseKind noise);

// ---- sweep ----

struct SweepRow {
  double m_over_n;
  double eta;
  std::string rule;
  double success_rate;
  long trials;
  double mean_final_nrmse;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

SweepResult run_success_sweep(const ExperimentConfig& cfg);

// ---- trace ----

struct TraceMeanRow {
  std::string rule;
  long iter;
  double mean_nrmse;
  double mean_objective;
  double mean_step;
};

struct TraceResult {
  double threshold;
  std::vector<std::string> rules;
  std::vector<TraceMeanRow> rows;
  // success[r][t]: trial t under rule r reached NRMSE <= threshold.
  std::vector<std::vector<char>> success;
};

TraceResult run_convergence_trace(const ExperimentConfig& cfg);

// ---- background influence ----

struct BackgroundRow {
  double alpha1;
  double alpha2;
  long iter;
  double mean_nrmse;
};

struct BackgroundResult {
  std::vector<BackgroundRow> rows;
};

BackgroundResult run_background_influence(const ExperimentConfig& cfg);

// ---- model comparison ----

struct CompareRow {
  std::string noise_type;  // "poisson" | "gaussian"
  std::string model;       // "poisson" | "gaussian"
  double m_over_n;
  double eta;
  double mean_final_nrmse;
  long trials;
};

struct CompareResult {
  std::vector<CompareRow> rows;
};

CompareResult run_model_comparison(const ExperimentConfig& cfg);

// ---- theory / verify ----

struct TheoryResult {
  std::vector<CurvatureConstants> rows;
};

TheoryResult run_theory_report(const ExperimentConfig& cfg);

struct VerifyCheck {
  std::string name;
  std::string params;
  double measured;
  std::string bound;
  bool pass;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

VerifyResult run_verify(const ExperimentConfig& cfg);

// ---- CSV / SVG emission ----

std::string to_csv(const SweepResult& r, const ExperimentConfig& cfg);
std::string to_csv(const TraceResult& r, const ExperimentConfig& cfg);
std::string to_csv(const BackgroundResult& r, const ExperimentConfig& cfg);
std::string to_csv(const CompareResult& r, const ExperimentConfig& cfg);
std::string to_csv(const TheoryResult& r, const ExperimentConfig& cfg);
std::string to_csv(const VerifyResult& r, const ExperimentConfig& cfg);

void write_file(const std::string& path, const std::string& contents);

std::string to_svg(const SweepResult& r);
std::string to_svg(const TraceResult& r);
std::string to_svg(const BackgroundResult& r);
std::string to_svg(const CompareResult& r);

}  // namespace wfpr
