#pragma once

// Test-only oracles, kept independent of the production solve path: the two
// equations of motion are assembled in matrix form and solved by Cramer's
// rule for both unknowns at once.

#include <cmath>

#include "cartpole/dynamics.hpp"

namespace cartpole::test {

struct OracleAccelerations {
  double cart = 0.0;
  double rod = 0.0;
};

// Solves
//   (M+m) xdd - m L cos(th) tdd = F - m L w^2 sin(th)   (cart equation)
//   -cos(th) xdd + L tdd        = g sin(th)             (rod equation)
inline OracleAccelerations solve_equations_of_motion(const SystemParams& p,
                                                     const State& s,
                                                     double f_net) {
  const double w = s.rod_angular_velocity;
  const double m11 = p.cart_mass + p.ball_mass;
  const double m12 = -p.ball_mass * p.rod_length * std::cos(s.rod_angle);
  const double b1 = f_net - p.ball_mass * p.rod_length * w * w * std::sin(s.rod_angle);
  const double m21 = -std::cos(s.rod_angle);
  const double m22 = p.rod_length;
  const double b2 = p.gravity * std::sin(s.rod_angle);
  const double det = m11 * m22 - m12 * m21;
  return {(b1 * m22 - m12 * b2) / det, (m11 * b2 - b1 * m21) / det};
}

inline double cart_equation_residual(const SystemParams& p, const State& s,
                                     double f_net, const Accelerations& a) {
  const double w = s.rod_angular_velocity;
  return (p.cart_mass + p.ball_mass) * a.cart -
         p.ball_mass * p.rod_length * a.rod * std::cos(s.rod_angle) +
         p.ball_mass * p.rod_length * w * w * std::sin(s.rod_angle) - f_net;
}

inline double rod_equation_residual(const SystemParams& p, const State& s,
                                    const Accelerations& a) {
  return -a.cart * std::cos(s.rod_angle) + p.rod_length * a.rod -
         p.gravity * std::sin(s.rod_angle);
}

// Kinetic energy in the unexpanded form 1/2 M v^2 + 1/2 m (vxm^2 + vym^2)
// built from the ball velocity components.
inline double kinetic_energy_from_ball_velocity(const SystemParams& p,
                                                const State& s) {
  const double ball_vx = s.cart_velocity - p.rod_length *
                                               s.rod_angular_velocity *
                                               std::cos(s.rod_angle);
  const double ball_vy =
      -p.rod_length * s.rod_angular_velocity * std::sin(s.rod_angle);
  return 0.5 * p.cart_mass * s.cart_velocity * s.cart_velocity +
         0.5 * p.ball_mass * (ball_vx * ball_vx + ball_vy * ball_vy);
}

}  // namespace cartpole::test
