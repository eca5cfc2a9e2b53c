#include "cartpole/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace cartpole {

namespace {

// Below this |cos theta| the rod acceleration is back-substituted through
// the rod equation (pivot L > 0) instead of dividing by -m L cos theta.
// The two forms are algebraically identical; switching this early keeps the
// cancellation error of the cart-equation form well under the 1e-9 residual
// budget.
constexpr double kCosSingularity = 1e-2;

}  // namespace

void validate(const SystemParams& p) {
  if (!(p.cart_mass > 0.0)) throw std::invalid_argument("cart_mass must be > 0");
  if (!(p.ball_mass > 0.0)) throw std::invalid_argument("ball_mass must be > 0");
  if (!(p.rod_length > 0.0)) throw std::invalid_argument("rod_length must be > 0");
  if (!(p.friction_coefficient >= 0.0))
    throw std::invalid_argument("friction_coefficient must be >= 0");
  if (!(p.gravity > 0.0)) throw std::invalid_argument("gravity must be > 0");
}

bool is_finite(const State& s) {
  return std::isfinite(s.cart_position) && std::isfinite(s.cart_velocity) &&
         std::isfinite(s.rod_angle) && std::isfinite(s.rod_angular_velocity);
}

double net_force(const SystemParams& p, double applied_force) {
  const double friction =
      p.friction_coefficient * (p.cart_mass + p.ball_mass) * p.gravity;
  if (std::abs(friction) > std::abs(applied_force)) return 0.0;
  if (applied_force > 0.0) return applied_force - friction;
  return applied_force + friction;
}

Accelerations accelerations(const SystemParams& p, const State& s,
                            double applied_force) {
  const double f_net = net_force(p, applied_force);
  const double sin_theta = std::sin(s.rod_angle);
  const double cos_theta = std::cos(s.rod_angle);
  const double ml = p.ball_mass * p.rod_length;
  const double angular_velocity = s.rod_angular_velocity;

  // Linear system in (cart_acc, rod_acc):
  //   a11 cart_acc + a12 rod_acc + r1 = 0   (cart equation)
  //   a21 cart_acc + a22 rod_acc + r2 = 0   (rod equation)
  const double a11 = p.cart_mass + p.ball_mass;
  const double a12 = -ml * cos_theta;
  const double r1 = ml * angular_velocity * angular_velocity * sin_theta - f_net;
  const double a21 = -cos_theta;
  const double a22 = p.rod_length;
  const double r2 = -p.gravity * sin_theta;

  const double det = a11 * a22 - a21 * a12;  // = L (M + m sin^2 theta) > 0
  const double cart_acc = (r2 * a12 - r1 * a22) / det;
  const double rod_acc = std::abs(cos_theta) < kCosSingularity
                             ? -(r2 + a21 * cart_acc) / a22
                             : -(r1 + a11 * cart_acc) / a12;
  return {cart_acc, rod_acc};
}

BallPosition ball_position(const SystemParams& p, const State& s) {
  return {s.cart_position - p.rod_length * std::sin(s.rod_angle),
          p.rod_length * std::cos(s.rod_angle)};
}

Energies energies(const SystemParams& p, const State& s) {
  const double v = s.cart_velocity;
  const double w = s.rod_angular_velocity;
  const double kinetic = 0.5 * p.cart_mass * v * v + 0.5 * p.ball_mass * v * v -
                         p.ball_mass * v * p.rod_length * w * std::cos(s.rod_angle) +
                         0.5 * p.ball_mass * p.rod_length * p.rod_length * w * w;
  const double potential =
      p.ball_mass * p.gravity * p.rod_length * std::cos(s.rod_angle);
  return {kinetic, potential, kinetic - potential};
}

}  // namespace cartpole
