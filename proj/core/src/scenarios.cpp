#include "cartpole/scenarios.hpp"

#include <numbers>
#include <vector>

namespace cartpole {

namespace {

SimConfig preset(PidGains gains, double initial_angle) {
  SimConfig config;
  config.gains = gains;
  config.initial_state.rod_angle = initial_angle;
  return config;
}

const std::vector<Scenario>& table() {
  static const std::vector<Scenario> scenarios = {
      {"fig2", "P controller (-200, 0, 0): sustained oscillation about the target",
       preset({-200.0, 0.0, 0.0}, std::numbers::pi / 4.0)},
      {"fig3", "PD controller (-200, 0, -100): little oscillation, steady-state error",
       preset({-200.0, 0.0, -100.0}, std::numbers::pi / 4.0)},
      {"fig4", "PID controller (-200, -20, -100): settles with no steady-state error",
       preset({-200.0, -20.0, -100.0}, std::numbers::pi / 4.0)},
      {"fig5", "RMSE-tuned PID (-308.08, -63.55, -94.96)",
       preset({-308.08, -63.55, -94.96}, std::numbers::pi / 4.0)},
      {"fig6", "RMSE-tuned PID from the shallower pi/6 start",
       preset({-308.08, -63.55, -94.96}, std::numbers::pi / 6.0)},
      {"fig7", "MAE-tuned PID (-289.57, -77.18, -60.65)",
       preset({-289.57, -77.18, -60.65}, std::numbers::pi / 4.0)},
  };
  return scenarios;
}

}  // namespace

std::span<const Scenario> scenarios() { return table(); }

const Scenario* find_scenario(std::string_view name) {
  for (const Scenario& scenario : table())
    if (scenario.name == name) return &scenario;
  return nullptr;
}

}  // namespace cartpole
