#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cml {

/// Effective configuration of one experiment run: the raw JSON config plus
/// command-line overrides.
struct ExperimentConfig {
  std::string experiment;
  std::string config_text = "{}";
  std::optional<long long> window_override;
  std::optional<int> trunc_override;
  std::optional<double> eps_override;
  std::optional<double> delta_override;
  bool parallel = false;
};

struct Verdict {
  std::string check;
  std::string status;  // pass | fail | inconclusive
  std::string detail;
};

/// Structured experiment output. json_text and csv_text are deterministic:
/// identical configs produce byte-identical documents (wall time is kept out
/// of them and only reported on the console).
struct ExperimentReport {
  std::string experiment;
  std::vector<Verdict> verdicts;
  std::string json_text;
  std::string csv_text;
  double wall_ms = 0.0;

  bool any_fail() const;
};

ExperimentReport run_riesz(const ExperimentConfig& config);
ExperimentReport run_nonsep(const ExperimentConfig& config);
ExperimentReport run_gap(const ExperimentConfig& config);
ExperimentReport run_wiener(const ExperimentConfig& config);
ExperimentReport run_ap(const ExperimentConfig& config);
ExperimentReport run_idem(const ExperimentConfig& config);
ExperimentReport run_spectrum(const ExperimentConfig& config);
ExperimentReport run_obstruct(const ExperimentConfig& config);
ExperimentReport run_filterlimit(const ExperimentConfig& config);

/// Dispatch by config.experiment; throws invalid_input_error for unknown
/// names.
ExperimentReport run_experiment(const ExperimentConfig& config);

const std::vector<std::string>& experiment_names();

/// Exit-code contract: 0 all pass, 1 any fail verdict, 2 input error (the
/// caller maps cml_error to 2).
int exit_code_for(const ExperimentReport& report);

}  // namespace cml
