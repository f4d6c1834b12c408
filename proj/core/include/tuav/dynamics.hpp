#pragma once

#include <Eigen/Core>
#include <cmath>

#include "tuav/fault.hpp"

namespace tuav {

/// Physical constants of the vehicle, tether and winch, plus linear drag.
struct SystemParams {
  double m = 2.84;      // vehicle mass, kg
  double g = 9.81;      // gravitational acceleration, m/s^2
  double ixx = 0.5192;  // moments of inertia, kg m^2
  double iyy = 0.4929;
  double izz = 0.0947;
  double ax = 0.25;  // linear drag coefficients, N s/m
  double ay = 0.25;
  double az = 0.25;
  double rho_tether = 0.034;     // tether linear density, kg/m
  double tether_area = 1.1e-4;   // tether cross-sectional area, m^2
  double l_max = 13.0;           // maximum tether length, m
  double r_w = 0.05;             // winch effective radius, m
  double beta_w = 0.01;          // winch viscous friction, N m s/rad
  double i_w = 0.002;            // winch moment of inertia, kg m^2
  double k_t = 1000.0;           // tether stiffness, N/m

  /// Throws Fault naming the offending field.
  void validate() const;
};

/// Full vehicle state: inertial position, Euler attitude, linear and
/// angular rates, winch angle and rate. Rates satisfy
/// (u,v,w) = (xdot,ydot,zdot) and (p,q,r) = (phidot,thetadot,psidot).
struct TuavState {
  double x = 0, y = 0, z = 0;
  double phi = 0, theta = 0, psi = 0;
  double u = 0, v = 0, w = 0;
  double p = 0, q = 0, r = 0;
  double winch_angle = 0;  // rad
  double winch_rate = 0;   // rad/s

  static constexpr int kDim = 14;
  using Vector = Eigen::Matrix<double, kDim, 1>;

  Eigen::Vector3d position() const { return {x, y, z}; }
  Eigen::Vector3d velocity() const { return {u, v, w}; }
  double deployed_length(const SystemParams& params) const {
    return params.r_w * winch_angle;
  }

  Vector to_vector() const;
  static TuavState from_vector(const Vector& v);

  bool attitude_in_range() const {
    return std::abs(phi) < M_PI / 2 && std::abs(theta) < M_PI / 2;
  }
};

/// Time derivative of TuavState, same component layout.
using TuavDerivative = TuavState::Vector;

/// The five actuator channels: thrust, three body torques, winch torque.
struct ControlInput {
  double thrust = 0;        // U_f, N
  double torque_roll = 0;   // N m
  double torque_pitch = 0;  // N m
  double torque_yaw = 0;    // N m
  double winch_torque = 0;  // N m

  bool all_finite() const;
};

/// Straight-line elastic tether pull resolved along the inertial axes.
/// The elevation/azimuth pair describes the ray from the anchor (origin)
/// to the vehicle; components are the trig resolution of the magnitude.
struct TetherForce {
  double magnitude = 0;  // T1 >= 0, N
  double elevation = 0;  // rad
  double azimuth = 0;    // rad
  Eigen::Vector3d components = Eigen::Vector3d::Zero();  // (T_X, T_Y, T_Z), N

  static TetherForce zero() { return {}; }
};

/// Point-mass abstraction used by the velocity- and acceleration-controlled
/// closed-loop scenarios.
struct PointMassState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();

  using Vector = Eigen::Matrix<double, 6, 1>;
  Vector to_vector() const {
    Vector out;
    out << position, velocity;
    return out;
  }
  static PointMassState from_vector(const Vector& v) {
    return {v.head<3>(), v.tail<3>()};
  }
};

/// One-sided linear spring: tension K_t * max(0, ||xi|| - L_d) with
/// deployed length L_d = r_w * winch_angle. Slack tether pulls nothing.
TetherForce tether_force(const TuavState& state, const SystemParams& params);

/// Equations of motion for the tethered vehicle. Returns all fourteen
/// state derivatives; throws Fault naming the row if any is non-finite.
TuavDerivative tuav_derivative(const TuavState& state, const ControlInput& input,
                               const TetherForce& tether, const SystemParams& params);

/// Double integrator: d(position)/dt = velocity, d(velocity)/dt = accel.
PointMassState::Vector point_mass_derivative(const PointMassState& state,
                                             const Eigen::Vector3d& accel);

namespace detail {
void require_stage_finite(const double* data, int n, const char* stage);
}

/// Classical fourth-order Runge-Kutta update with the derivative evaluated
/// through `deriv` (inputs held constant by the caller's closure).
/// Throws Fault identifying the stage if an intermediate is non-finite.
template <class Vec, class Fn>
Vec rk4_step(const Fn& deriv, const Vec& x0, double dt) {
  if (!(dt > 0)) throw Fault("rk4_step: dt must be > 0");
  const Vec k1 = deriv(x0);
  detail::require_stage_finite(k1.data(), static_cast<int>(k1.size()), "k1");
  const Vec k2 = deriv(Vec(x0 + 0.5 * dt * k1));
  detail::require_stage_finite(k2.data(), static_cast<int>(k2.size()), "k2");
  const Vec k3 = deriv(Vec(x0 + 0.5 * dt * k2));
  detail::require_stage_finite(k3.data(), static_cast<int>(k3.size()), "k3");
  const Vec k4 = deriv(Vec(x0 + dt * k3));
  detail::require_stage_finite(k4.data(), static_cast<int>(k4.size()), "k4");
  return x0 + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Full-vehicle step: zero-order hold on the input, tether force
/// re-evaluated from the stage states.
TuavState rk4_step(const TuavState& state, const ControlInput& input,
                   const SystemParams& params, double dt);

/// Point-mass step with the acceleration held across the step.
PointMassState rk4_step(const PointMassState& state, const Eigen::Vector3d& accel,
                        double dt);

}  // namespace tuav
