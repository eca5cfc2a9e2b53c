#include "cartpole/pid.hpp"

#include <stdexcept>

namespace cartpole {

PidController::PidController(PidGains gains, double target_angle,
                             double saturation_low, double saturation_high)
    : gains_(gains),
      target_angle_(target_angle),
      saturation_low_(saturation_low),
      saturation_high_(saturation_high) {
  if (!(saturation_low < saturation_high))
    throw std::invalid_argument("saturation_low must be < saturation_high");
}

void PidController::reset() {
  integral_ = 0.0;
  previous_error_ = 0.0;
  initialized_ = false;
}

double PidController::update(double measured_angle, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("pid update requires dt > 0");
  const double error = measured_angle - target_angle_;
  integral_ += error * dt;
  const double derivative = initialized_ ? (error - previous_error_) / dt : 0.0;
  double command = gains_.proportional * error + gains_.integral * integral_ +
                   gains_.derivative * derivative;
  if (command > saturation_high_) {
    command = saturation_high_;
  } else if (command < saturation_low_) {
    command = saturation_low_;
  }
  previous_error_ = error;
  initialized_ = true;
  return command;
}

}  // namespace cartpole
