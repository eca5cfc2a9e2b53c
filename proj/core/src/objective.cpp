#include "cartpole/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cartpole {

void validate(const ObjectiveSpec& spec) {
  if (!(spec.gain_penalty_weight >= 0.0))
    throw std::invalid_argument("gain_penalty_weight must be >= 0");
  if (!(spec.divergence_penalty > 0.0) || !std::isfinite(spec.divergence_penalty))
    throw std::invalid_argument("divergence_penalty must be positive and finite");
  validate(spec.sim);
}

double rmse(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum / static_cast<double>(values.size()));
}

double mae(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += std::abs(v);
  return sum / static_cast<double>(values.size());
}

double evaluate(const ObjectiveSpec& spec, const PidGains& gains) {
  validate(spec);
  if (!std::isfinite(gains.proportional) || !std::isfinite(gains.integral) ||
      !std::isfinite(gains.derivative))
    throw std::invalid_argument("gains must be finite");

  SimConfig sim = spec.sim;
  sim.gains = gains;
  const double gain_term =
      spec.gain_penalty_weight * (std::abs(gains.proportional) +
                                  std::abs(gains.integral) +
                                  std::abs(gains.derivative));

  const Trajectory trajectory = run(sim);
  double metric_term = std::numeric_limits<double>::quiet_NaN();
  if (!trajectory.diverged) {
    double sum = 0.0;
    for (const TrajectorySample& sample : trajectory.samples) {
      const double error = sample.state.rod_angle - sim.target_angle;
      sum += spec.metric == Metric::rmse ? error * error : std::abs(error);
    }
    const double mean = sum / static_cast<double>(trajectory.samples.size());
    metric_term = spec.metric == Metric::rmse ? std::sqrt(mean) : mean;
  }
  if (!std::isfinite(metric_term)) return spec.divergence_penalty + gain_term;
  return metric_term + gain_term;
}

AngleStats angle_stats(const Trajectory& trajectory) {
  AngleStats stats;
  const std::size_t n = trajectory.samples.size();
  if (n == 0) return stats;

  double sum_sq = 0.0;
  double sum_abs = 0.0;
  for (const TrajectorySample& sample : trajectory.samples) {
    const double a = std::abs(sample.state.rod_angle);
    sum_sq += a * a;
    sum_abs += a;
    stats.max_abs = std::max(stats.max_abs, a);
  }
  stats.rmse = std::sqrt(sum_sq / static_cast<double>(n));
  stats.mae = sum_abs / static_cast<double>(n);

  const std::size_t tail = std::max<std::size_t>(n / 3, 1);
  double tail_sum = 0.0;
  for (std::size_t i = n - tail; i < n; ++i)
    tail_sum += std::abs(trajectory.samples[i].state.rod_angle);
  stats.final_third_mean_abs = tail_sum / static_cast<double>(tail);
  return stats;
}

}  // namespace cartpole
