#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include "cartpole/objective.hpp"

using namespace cartpole;

TEST_CASE("perfect regulation from the target scores zero at zero weight") {
  ObjectiveSpec spec;
  spec.gain_penalty_weight = 0.0;
  spec.sim.initial_state.rod_angle = 0.0;
  CHECK(evaluate(spec, {0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("frozen regression costs for the figure gain triples") {
  ObjectiveSpec spec;
  CHECK(evaluate(spec, {-200.0, 0.0, 0.0}) ==
        doctest::Approx(0.58262009254229297).epsilon(1e-9));
  CHECK(evaluate(spec, {-200.0, 0.0, -100.0}) ==
        doctest::Approx(0.38410165349180103).epsilon(1e-9));
  CHECK(evaluate(spec, {-200.0, -20.0, -100.0}) ==
        doctest::Approx(0.23545028752783798).epsilon(1e-9));
  CHECK(evaluate(spec, {-300.0, 0.0, -100.0}) ==
        doctest::Approx(0.23320877258656703).epsilon(1e-9));

  // the manual PID beats the P controller
  CHECK(evaluate(spec, {-200.0, -20.0, -100.0}) <
        evaluate(spec, {-200.0, 0.0, 0.0}));
  CHECK(evaluate(spec, {-200.0, -20.0, -100.0}) > 0.0);
}

TEST_CASE("rmse and mae helpers") {
  const std::vector<double> values = {1.0, -1.0, 1.0, -1.0};
  CHECK(rmse(values) == doctest::Approx(1.0));
  CHECK(mae(values) == doctest::Approx(1.0));
  const std::vector<double> mixed = {3.0, 0.0, 0.0, 0.0};
  CHECK(rmse(mixed) == doctest::Approx(1.5));
  CHECK(mae(mixed) == doctest::Approx(0.75));
  CHECK(rmse({}) == 0.0);
  CHECK(mae({}) == 0.0);
}

TEST_CASE("rmse term dominates the mae term for any gains") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> gain(-400.0, 50.0);
  ObjectiveSpec rmse_spec;
  rmse_spec.gain_penalty_weight = 0.0;
  ObjectiveSpec mae_spec = rmse_spec;
  mae_spec.metric = Metric::mae;

  for (int i = 0; i < 12; ++i) {
    const PidGains gains{gain(rng), gain(rng) / 10, gain(rng) / 2};
    CHECK(evaluate(rmse_spec, gains) >= evaluate(mae_spec, gains));
  }
  const PidGains manual{-200.0, -20.0, -100.0};
  CHECK(evaluate(rmse_spec, manual) >= evaluate(mae_spec, manual));
}

TEST_CASE("gain penalty grows strictly with the weight") {
  const PidGains gains{-200.0, -20.0, -100.0};
  ObjectiveSpec spec;
  double previous = -1.0;
  for (double weight : {0.0, 1e-4, 1e-3, 1e-2}) {
    spec.gain_penalty_weight = weight;
    const double cost = evaluate(spec, gains);
    CHECK(cost > previous);
    previous = cost;
  }
  // exact increment: weight * (|k_p| + |k_i| + |k_d|)
  spec.gain_penalty_weight = 0.0;
  const double base = evaluate(spec, gains);
  spec.gain_penalty_weight = 1e-4;
  CHECK(evaluate(spec, gains) ==
        doctest::Approx(base + 1e-4 * 320.0).epsilon(1e-12));
}

TEST_CASE("the error series is the full recorded angle series") {
  ObjectiveSpec spec;
  spec.gain_penalty_weight = 0.0;
  const PidGains gains{-200.0, -20.0, -100.0};

  SimConfig sim = spec.sim;
  sim.gains = gains;
  const Trajectory t = run(sim);
  REQUIRE(t.samples.size() == 15000);
  std::vector<double> errors;
  errors.reserve(t.samples.size());
  for (const TrajectorySample& s : t.samples)
    errors.push_back(s.state.rod_angle - sim.target_angle);

  CHECK(evaluate(spec, gains) == doctest::Approx(rmse(errors)).epsilon(1e-15));
  spec.metric = Metric::mae;
  CHECK(evaluate(spec, gains) == doctest::Approx(mae(errors)).epsilon(1e-15));
}

TEST_CASE("diverging runs score the divergence penalty plus the gain term") {
  ObjectiveSpec spec;
  spec.sim.saturation_low = -1e300;
  spec.sim.saturation_high = 1e300;
  const PidGains runaway{1e8, 0.0, 0.0};

  SimConfig sim = spec.sim;
  sim.gains = runaway;
  REQUIRE(run(sim).diverged);

  const double cost = evaluate(spec, runaway);
  CHECK(cost == spec.divergence_penalty + 1e-4 * 1e8);
  CHECK(std::isfinite(cost));

  spec.metric = Metric::mae;
  CHECK(evaluate(spec, runaway) == cost);
}

TEST_CASE("evaluate validates its spec") {
  ObjectiveSpec spec;
  spec.gain_penalty_weight = -1e-4;
  CHECK_THROWS_AS(evaluate(spec, {}), std::invalid_argument);

  spec = ObjectiveSpec{};
  spec.divergence_penalty = 0.0;
  CHECK_THROWS_AS(evaluate(spec, {}), std::invalid_argument);

  spec = ObjectiveSpec{};
  spec.sim.duration = 0.0;
  CHECK_THROWS_AS(evaluate(spec, {-300.0, 0.0, -100.0}), std::invalid_argument);
}

TEST_CASE("angle stats on a known series") {
  Trajectory t;
  // angles 0.3, -0.6, 0.3, 0.0, 0.0, 0.0 -> final third is the last 2
  const double angles[] = {0.3, -0.6, 0.3, 0.0, 0.0, 0.0};
  for (int i = 0; i < 6; ++i)
    t.samples.push_back({0.1 * (i + 1), {0, 0, angles[i], 0}, 0.0, 0.0});

  const AngleStats stats = angle_stats(t);
  CHECK(stats.max_abs == 0.6);
  CHECK(stats.mae == doctest::Approx(1.2 / 6).epsilon(1e-12));
  CHECK(stats.rmse == doctest::Approx(std::sqrt(0.54 / 6)).epsilon(1e-12));
  CHECK(stats.final_third_mean_abs == 0.0);

  CHECK(angle_stats(Trajectory{}).rmse == 0.0);
}
