#pragma once

namespace cartpole {

// Proportional/integral/derivative gain triple. The stabilizing gains for
// this plant are all negative; no sign restriction applies.
struct PidGains {
  double proportional = 0.0;  // K_p (N/rad)
  double integral = 0.0;      // K_i (N/(rad s))
  double derivative = 0.0;    // K_d (N s/rad)
};

// Discrete-time PID with output saturation. Keeps the running error
// integral and the previous error between update() calls. Single-owner
// mutable state: distinct instances are independent, one instance must not
// be updated concurrently.
class PidController {
 public:
  // Throws std::invalid_argument unless saturation_low < saturation_high.
  PidController(PidGains gains, double target_angle,
                double saturation_low = -500.0, double saturation_high = 500.0);

  // Zeroes the integral accumulator and forgets the previous error; gains
  // and bounds are unchanged. Idempotent.
  void reset();

  // One control step. error = measured_angle - target. The integral
  // accumulates (left-rectangle rule) before the output is formed; the
  // derivative is a backward difference, zero on the first call after
  // construction or reset(). The summed output is clamped to the saturation
  // bounds. No anti-windup: the accumulator keeps integrating while the
  // output is clamped. Throws std::invalid_argument when dt <= 0.
  double update(double measured_angle, double dt);

  const PidGains& gains() const { return gains_; }
  double target_angle() const { return target_angle_; }
  double saturation_low() const { return saturation_low_; }
  double saturation_high() const { return saturation_high_; }
  double integral_accumulator() const { return integral_; }
  double previous_error() const { return previous_error_; }
  bool initialized() const { return initialized_; }

 private:
  PidGains gains_;
  double target_angle_;
  double saturation_low_;
  double saturation_high_;
  double integral_ = 0.0;
  double previous_error_ = 0.0;
  bool initialized_ = false;
};

}  // namespace cartpole
