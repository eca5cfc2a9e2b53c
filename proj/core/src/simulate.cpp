#include "cartpole/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cartpole {

void validate(const SimConfig& c) {
  validate(c.params);
  if (!is_finite(c.initial_state))
    throw std::invalid_argument("initial_state must be finite");
  if (!(c.dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (!(c.duration > 0.0)) throw std::invalid_argument("duration must be > 0");
  if (!std::isfinite(c.gains.proportional))
    throw std::invalid_argument("k_p must be finite");
  if (!std::isfinite(c.gains.integral))
    throw std::invalid_argument("k_i must be finite");
  if (!std::isfinite(c.gains.derivative))
    throw std::invalid_argument("k_d must be finite");
  if (!std::isfinite(c.target_angle))
    throw std::invalid_argument("target_angle must be finite");
  if (!(c.saturation_low < c.saturation_high))
    throw std::invalid_argument("saturation_low must be < saturation_high");

  const double steps = c.duration / c.dt;
  const double rounded = std::round(steps);
  const double ulp =
      std::nextafter(steps, std::numeric_limits<double>::infinity()) - steps;
  if (rounded < 1.0 || std::abs(steps - rounded) > 0.5 * ulp)
    throw std::invalid_argument("duration must be an integer multiple of dt");
}

std::size_t step_count(const SimConfig& c) {
  return static_cast<std::size_t>(std::llround(c.duration / c.dt));
}

State step(const SystemParams& params, const State& s, double command,
           double dt) {
  const Accelerations acc = accelerations(params, s, command);
  State next;
  next.cart_position =
      s.cart_position + s.cart_velocity * dt + 0.5 * acc.cart * dt * dt;
  next.cart_velocity = s.cart_velocity + acc.cart * dt;
  next.rod_angle =
      s.rod_angle + s.rod_angular_velocity * dt + 0.5 * acc.rod * dt * dt;
  next.rod_angular_velocity = s.rod_angular_velocity + acc.rod * dt;
  return next;
}

Trajectory run(const SimConfig& c) {
  validate(c);
  const std::size_t n = step_count(c);
  PidController controller(c.gains, c.target_angle, c.saturation_low,
                           c.saturation_high);
  Trajectory trajectory;
  trajectory.samples.reserve(n);
  State state = c.initial_state;
  for (std::size_t k = 0; k < n; ++k) {
    const double command = controller.update(state.rod_angle, c.dt);
    state = step(c.params, state, command, c.dt);
    if (!is_finite(state)) {
      trajectory.diverged = true;
      trajectory.halt_step = k;
      break;
    }
    trajectory.samples.push_back({static_cast<double>(k + 1) * c.dt, state,
                                  command, net_force(c.params, command)});
  }
  return trajectory;
}

}  // namespace cartpole
