#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "cartpole/dynamics.hpp"
#include "cartpole/pid.hpp"

namespace cartpole {

// One closed-loop run setup. Defaults mirror the reference experiment:
// 1 ms steps for 15 s from a quarter-turn lean, zero target angle, command
// saturated to +-500 N.
struct SimConfig {
  SystemParams params{};
  State initial_state{0.0, 0.0, std::numbers::pi / 4.0, 0.0};
  double dt = 1e-3;        // s
  double duration = 15.0;  // s
  PidGains gains{};
  double target_angle = 0.0;  // rad
  double saturation_low = -500.0;
  double saturation_high = 500.0;
};

// Throws std::invalid_argument naming the offending field. duration/dt must
// land on an integer step count to within 0.5 ulp.
void validate(const SimConfig& config);

// Number of steps duration/dt. Meaningful only for a config that validates.
std::size_t step_count(const SimConfig& config);

struct TrajectorySample {
  double t = 0.0;         // time of the recorded (post-step) state
  State state{};
  double command = 0.0;   // u held over the step
  double net_force = 0.0; // F after the friction dead zone
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  // Set when a state field went non-finite; samples stop at the last finite
  // step and halt_step is the iteration index that failed.
  bool diverged = false;
  std::size_t halt_step = 0;
};

// Advances one fixed step under a zero-order-hold command: accelerations
// are evaluated once at the current state and treated as constant across
// dt, so positions advance by v dt + a dt^2 / 2 and velocities by a dt.
State step(const SystemParams& params, const State& state, double command,
           double dt);

// Full closed-loop run: each iteration the controller sees the pre-step
// angle, its command drives one step, and the post-step state is recorded
// at t = (k+1) dt. Constructs its own controller, so equal configs yield
// identical trajectories; safe to call from multiple threads.
Trajectory run(const SimConfig& config);

}  // namespace cartpole
