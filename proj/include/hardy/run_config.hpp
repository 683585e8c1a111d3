#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hardy/field.hpp"

namespace hardy {

// Plain key=value experiment configuration. '#' starts a comment, blank
// lines are skipped, unknown keys are rejected with their line number.
// Every field has a default; the fully resolved set is echoed into run
// outputs.
struct RunConfig {
  int dim = 1;
  int n_points = 1024;
  double half_width = 20.0;

  double t_start = 0.0;
  double t_end = 1.0;
  double dt = 0.05;
  std::vector<double> times; // overrides the window when nonempty

  double alpha = 2.0;
  double beta = 2.0;
  double T = 1.0;

  std::vector<double> lambdas{0.0, 1.0, 2.0};
  double epsilon = 1e-6;
  double t_min = 1e-3;

  std::string data = "gaussian"; // gaussian | hermite | polynomial | bump
  double gamma = 0.5;
  int hermite_k = 1;
  std::vector<double> poly{1.0, 0.0, 1.0};
  double bump_width = 3.0;
  double bump_center = 0.0;

  std::string method = "spectral"; // evolve: spectral | convolution | pseudoconformal | all
  double cutoff = 10.0;
  std::vector<double> gammas; // hardy_scan; filled from beta/alpha when empty

  std::uint64_t seed = 12345;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// key=value dump of every field, sorted, one per line.
std::string resolved_config_text(const RunConfig& c);

// times list: explicit `times` wins, otherwise the t_start/t_end/dt window.
std::vector<double> config_times(const RunConfig& c);

// Builds the configured data family on the configured grid.
Grid config_grid(const RunConfig& c);
SampledField config_datum(const RunConfig& c);

} // namespace hardy
