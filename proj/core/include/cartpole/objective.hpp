#pragma once

#include <span>

#include "cartpole/simulate.hpp"

namespace cartpole {

enum class Metric { rmse, mae };

// Scoring setup for one gain candidate: a full closed-loop run plus the
// regularized angle-error metric
//   metric(theta_k - target) + weight (|K_p| + |K_i| + |K_d|).
struct ObjectiveSpec {
  Metric metric = Metric::rmse;
  double gain_penalty_weight = 1e-4;
  SimConfig sim{};
  // Large finite cost charged to runs that halt non-finite, keeping
  // diverging candidates ordered for the optimizer without propagating NaN.
  double divergence_penalty = 1e6;
};

void validate(const ObjectiveSpec& spec);

double rmse(std::span<const double> values);
double mae(std::span<const double> values);

// Runs the simulation with the candidate gains and scores the recorded
// angle series against the target. Halted runs (and metrics that overflow)
// score divergence_penalty plus the gain term. Never returns a non-finite
// value for finite gains; equal inputs give equal costs.
double evaluate(const ObjectiveSpec& spec, const PidGains& gains);

// Angle statistics for trajectory comparison reports, measured against a
// zero target angle.
struct AngleStats {
  double rmse = 0.0;
  double mae = 0.0;
  double max_abs = 0.0;
  double final_third_mean_abs = 0.0;
};

AngleStats angle_stats(const Trajectory& trajectory);

}  // namespace cartpole
