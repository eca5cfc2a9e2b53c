#include "cartpole/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace cartpole {

namespace {

using Point = std::array<double, 3>;

Point to_point(const PidGains& g) {
  return {g.proportional, g.integral, g.derivative};
}

PidGains to_gains(const Point& p) { return {p[0], p[1], p[2]}; }

struct Vertex {
  Point point{};
  double cost = 0.0;
  int order = 0;  // insertion index; breaks cost ties deterministically
};

}  // namespace

void validate(const OptimizerConfig& c) {
  if (!std::isfinite(c.initial_gains.proportional) ||
      !std::isfinite(c.initial_gains.integral) ||
      !std::isfinite(c.initial_gains.derivative))
    throw std::invalid_argument("initial_gains must be finite");
  if (c.max_evaluations < 4)
    throw std::invalid_argument("max_evaluations must be >= 4");
  if (!(c.simplex_scale > 0.0))
    throw std::invalid_argument("simplex_scale must be > 0");
  if (!(c.zero_coordinate_step > 0.0))
    throw std::invalid_argument("zero_coordinate_step must be > 0");
  if (!(c.convergence_tolerance > 0.0))
    throw std::invalid_argument("convergence_tolerance must be > 0");
  if (!(c.reflection > 0.0))
    throw std::invalid_argument("reflection coefficient must be > 0");
  if (!(c.expansion > 1.0))
    throw std::invalid_argument("expansion coefficient must be > 1");
  if (!(c.contraction > 0.0 && c.contraction < 1.0))
    throw std::invalid_argument("contraction coefficient must be in (0, 1)");
  if (!(c.shrink > 0.0 && c.shrink < 1.0))
    throw std::invalid_argument("shrink coefficient must be in (0, 1)");
}

TuneResult minimize(const GainObjective& objective, const OptimizerConfig& config) {
  validate(config);

  int evaluations = 0;
  const auto score = [&](const Point& p) {
    ++evaluations;
    return objective(to_gains(p));
  };

  int next_order = 0;
  std::array<Vertex, 4> simplex;
  const Point seed = to_point(config.initial_gains);
  simplex[0] = {seed, score(seed), next_order++};
  for (int i = 0; i < 3; ++i) {
    Point p = seed;
    // Perturbation is signed by the coordinate itself (scale it away from
    // zero); zero coordinates get the absolute step.
    p[i] += p[i] == 0.0 ? config.zero_coordinate_step
                        : config.simplex_scale * p[i];
    simplex[i + 1] = {p, score(p), next_order++};
  }

  const auto by_cost = [](const Vertex& a, const Vertex& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.order < b.order);
  };
  std::sort(simplex.begin(), simplex.end(), by_cost);

  TuneResult result;
  result.cost_history.push_back(simplex[0].cost);

  bool converged =
      simplex[3].cost - simplex[0].cost < config.convergence_tolerance;
  while (!converged && evaluations < config.max_evaluations) {
    Vertex& worst = simplex[3];

    Point centroid{};  // of all vertices but the worst
    for (int i = 0; i < 3; ++i)
      for (int d = 0; d < 3; ++d) centroid[d] += simplex[i].point[d] / 3.0;

    // Point on the worst-to-centroid axis: coeff > 0 is beyond the
    // centroid, coeff < 0 back toward the worst vertex.
    const auto along_axis = [&](double coeff) {
      Point p;
      for (int d = 0; d < 3; ++d)
        p[d] = centroid[d] + coeff * (centroid[d] - worst.point[d]);
      return p;
    };

    const Point reflected = along_axis(config.reflection);
    const double reflected_cost = score(reflected);

    if (reflected_cost < simplex[0].cost) {
      const Point expanded = along_axis(config.reflection * config.expansion);
      const double expanded_cost = score(expanded);
      if (expanded_cost < reflected_cost)
        worst = {expanded, expanded_cost, next_order++};
      else
        worst = {reflected, reflected_cost, next_order++};
    } else if (reflected_cost < simplex[2].cost) {
      worst = {reflected, reflected_cost, next_order++};
    } else {
      const bool outside = reflected_cost < worst.cost;
      const Point contracted = along_axis(
          outside ? config.reflection * config.contraction : -config.contraction);
      const double contracted_cost = score(contracted);
      const bool accept = outside ? contracted_cost <= reflected_cost
                                  : contracted_cost < worst.cost;
      if (accept) {
        worst = {contracted, contracted_cost, next_order++};
      } else {
        for (int i = 1; i < 4; ++i) {
          Point p;
          for (int d = 0; d < 3; ++d)
            p[d] = simplex[0].point[d] +
                   config.shrink * (simplex[i].point[d] - simplex[0].point[d]);
          simplex[i] = {p, score(p), next_order++};
        }
      }
    }

    std::sort(simplex.begin(), simplex.end(), by_cost);
    result.cost_history.push_back(simplex[0].cost);
    converged = simplex[3].cost - simplex[0].cost < config.convergence_tolerance;
  }

  result.best_gains = to_gains(simplex[0].point);
  result.best_cost = simplex[0].cost;
  result.evaluation_count = evaluations;
  result.converged = converged;
  return result;
}

TuneResult minimize(const ObjectiveSpec& spec, const OptimizerConfig& config) {
  validate(spec);
  return minimize(
      [&spec](const PidGains& gains) { return evaluate(spec, gains); }, config);
}

}  // namespace cartpole
