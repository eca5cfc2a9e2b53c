#pragma once

#include <functional>
#include <vector>

#include "cartpole/objective.hpp"

namespace cartpole {

// Nelder-Mead setup over the 3-dimensional gain space.
struct OptimizerConfig {
  PidGains initial_gains{};
  int max_evaluations = 2000;  // main-loop budget; the initial simplex adds 4
  double simplex_scale = 0.05; // perturbation as a fraction of |coordinate|
  double zero_coordinate_step = 1.0;  // absolute perturbation where a coordinate is 0
  double convergence_tolerance = 1e-6;  // worst-minus-best cost spread
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

void validate(const OptimizerConfig& config);

struct TuneResult {
  PidGains best_gains{};
  double best_cost = 0.0;
  int evaluation_count = 0;
  bool converged = false;
  // Best vertex cost after the initial simplex and after each iteration;
  // non-increasing.
  std::vector<double> cost_history;
};

using GainObjective = std::function<double(const PidGains&)>;

// Derivative-free simplex descent from config.initial_gains. Stops when the
// simplex cost spread drops below the tolerance or the evaluation budget is
// spent; non-convergence is reported through the flag, never an error. The
// seed stays in the simplex until improved on, so best_cost never exceeds
// the seed cost. Deterministic: cost ties in vertex ordering break by
// insertion index.
TuneResult minimize(const GainObjective& objective, const OptimizerConfig& config);

// Scores candidates with evaluate(spec, gains).
TuneResult minimize(const ObjectiveSpec& spec, const OptimizerConfig& config);

}  // namespace cartpole
