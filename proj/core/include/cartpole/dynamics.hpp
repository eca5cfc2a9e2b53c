#pragma once

namespace cartpole {

// Physical constants of the cart-pole plant. SI units throughout.
struct SystemParams {
  double cart_mass = 5.0;             // M (kg)
  double ball_mass = 5.0;             // m (kg)
  double rod_length = 1.0;            // L (m)
  double friction_coefficient = 0.3;  // mu (dimensionless)
  double gravity = 9.8;               // g (m/s^2)
};

// Throws std::invalid_argument naming the offending field.
void validate(const SystemParams& params);

// Generalized coordinates and velocities at one instant. The rod angle is
// measured from upright and is an unbounded real; nothing here wraps it.
struct State {
  double cart_position = 0.0;         // x (m)
  double cart_velocity = 0.0;         // x_dot (m/s)
  double rod_angle = 0.0;             // theta (rad)
  double rod_angular_velocity = 0.0;  // theta_dot (rad/s)
};

bool is_finite(const State& state);

struct Accelerations {
  double cart = 0.0;  // x_ddot (m/s^2)
  double rod = 0.0;   // theta_ddot (rad/s^2)
};

struct BallPosition {
  double x = 0.0;
  double y = 0.0;
};

struct Energies {
  double kinetic = 0.0;    // J
  double potential = 0.0;  // J
  double lagrangian = 0.0; // kinetic - potential
};

// Coulomb friction with a dead zone: when the friction magnitude
// mu (M+m) g exceeds |applied| the net force is zero, otherwise the
// magnitude is taken off the applied force. The switch is on the sign of
// the applied force, not the cart velocity, so a coasting cart with zero
// command sees no friction at all.
double net_force(const SystemParams& params, double applied_force);

// Cart and rod accelerations from the two equations of motion, solved as a
// 2x2 linear system. Total for finite inputs: the system determinant is
// L (M + m sin^2 theta) >= L M > 0 for every angle.
Accelerations accelerations(const SystemParams& params, const State& state,
                            double applied_force);

// Ball (rod tip) position in the vertical plane: (x - L sin theta, L cos theta).
BallPosition ball_position(const SystemParams& params, const State& state);

// Kinetic, potential, and Lagrangian energy of the plant.
Energies energies(const SystemParams& params, const State& state);

}  // namespace cartpole
