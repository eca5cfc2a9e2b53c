#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cartpole/optimizer.hpp"

using namespace cartpole;

namespace {

double quadratic(const PidGains& g) {
  return (g.proportional - 1.0) * (g.proportional - 1.0) +
         (g.integral - 2.0) * (g.integral - 2.0) +
         (g.derivative - 3.0) * (g.derivative - 3.0);
}

}  // namespace

TEST_CASE("constant objective converges on the first spread check") {
  OptimizerConfig config;
  config.initial_gains = {-300.0, 0.0, -100.0};
  const TuneResult result = minimize(GainObjective([](const PidGains&) {
                                       return 7.0;
                                     }),
                                     config);
  CHECK(result.best_cost == 7.0);
  CHECK(result.converged);
  CHECK(result.evaluation_count == 4);
  CHECK(result.cost_history.size() == 1);
  // cost ties keep insertion order, so the seed vertex wins
  CHECK(result.best_gains.proportional == -300.0);
  CHECK(result.best_gains.integral == 0.0);
  CHECK(result.best_gains.derivative == -100.0);
}

TEST_CASE("quadratic bowl from the origin lands on the analytic minimum") {
  OptimizerConfig config;
  config.initial_gains = {0.0, 0.0, 0.0};  // every vertex uses the zero step
  config.convergence_tolerance = 1e-10;
  const TuneResult result = minimize(GainObjective(quadratic), config);
  CHECK(result.converged);
  CHECK(std::abs(result.best_gains.proportional - 1.0) < 1e-3);
  CHECK(std::abs(result.best_gains.integral - 2.0) < 1e-3);
  CHECK(std::abs(result.best_gains.derivative - 3.0) < 1e-3);
  CHECK(result.best_cost < 1e-6);
  CHECK(result.evaluation_count <= config.max_evaluations + 4);
}

TEST_CASE("evaluation budget is respected within the simplex allowance") {
  OptimizerConfig config;
  config.initial_gains = {50.0, -80.0, 10.0};
  config.max_evaluations = 50;
  config.convergence_tolerance = 1e-15;
  const TuneResult result = minimize(GainObjective(quadratic), config);
  CHECK(result.evaluation_count <= 50 + 4);
  CHECK_FALSE(result.converged);
  CHECK(result.best_cost <= quadratic({50.0, -80.0, 10.0}));
}

TEST_CASE("best cost never exceeds the seed cost and history is monotone") {
  OptimizerConfig config;
  config.initial_gains = {4.0, 4.0, 4.0};
  const TuneResult result = minimize(GainObjective(quadratic), config);
  CHECK(result.best_cost <= quadratic({4.0, 4.0, 4.0}));
  REQUIRE_FALSE(result.cost_history.empty());
  for (std::size_t i = 1; i < result.cost_history.size(); ++i)
    REQUIRE(result.cost_history[i] <= result.cost_history[i - 1]);
  CHECK(result.cost_history.back() == result.best_cost);
}

TEST_CASE("minimize is deterministic") {
  OptimizerConfig config;
  config.initial_gains = {10.0, 0.0, -5.0};
  const TuneResult a = minimize(GainObjective(quadratic), config);
  const TuneResult b = minimize(GainObjective(quadratic), config);
  CHECK(a.best_cost == b.best_cost);
  CHECK(a.best_gains.proportional == b.best_gains.proportional);
  CHECK(a.best_gains.integral == b.best_gains.integral);
  CHECK(a.best_gains.derivative == b.best_gains.derivative);
  CHECK(a.evaluation_count == b.evaluation_count);
  CHECK(a.cost_history == b.cost_history);
}

TEST_CASE("config validation") {
  OptimizerConfig config;
  SUBCASE("needs at least one simplex of evaluations") {
    config.max_evaluations = 3;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
  }
  SUBCASE("tolerance must be positive") {
    config.convergence_tolerance = 0.0;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
  }
  SUBCASE("coefficients must be in their standard ranges") {
    config.contraction = 1.5;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
    config = OptimizerConfig{};
    config.shrink = 0.0;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
    config = OptimizerConfig{};
    config.expansion = 1.0;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
  }
  SUBCASE("simplex steps must be positive") {
    config.simplex_scale = 0.0;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
    config = OptimizerConfig{};
    config.zero_coordinate_step = -1.0;
    CHECK_THROWS_AS(minimize(GainObjective(quadratic), config),
                    std::invalid_argument);
  }
}

TEST_CASE("objective-spec overload improves on the seed") {
  ObjectiveSpec spec;
  spec.sim.duration = 0.5;  // short run keeps the unit suite fast

  OptimizerConfig config;
  config.initial_gains = {-300.0, 0.0, -100.0};
  config.max_evaluations = 120;

  const TuneResult result = minimize(spec, config);
  const double seed_cost = evaluate(spec, config.initial_gains);
  CHECK(result.best_cost <= seed_cost);
  CHECK(std::isfinite(result.best_cost));
  CHECK(result.evaluation_count <= 124);
}
