#pragma once

#include <Eigen/Core>

#include "tuav/dynamics.hpp"

namespace tuav {

/// One backstepping pair: k1 shapes the virtual-control (position) loop,
/// k2 the transformed-velocity loop. Both must be positive.
struct GainPair {
  double k1 = 2.0;
  double k2 = 2.0;
};

/// Gains for every control channel plus the point-mass PD pair.
struct GainSet {
  GainPair altitude;
  GainPair lateral_x;
  GainPair lateral_y;
  GainPair roll;
  GainPair pitch;
  GainPair yaw;
  GainPair winch{4.0, 4.0};
  double kp = 4.0;          // point-mass proportional gain, 1/s^2
  double kd = 4.0;          // point-mass derivative gain, 1/s
  double tilt_limit = 0.5;  // commanded roll/pitch saturation, rad

  void validate() const;  // throws Fault naming the offending gain
};

/// Static or per-tick sampled reference for the controllers.
struct Setpoint {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();  // feedforward, zero when static
  double yaw = 0;            // rad
  double tether_length = 13; // desired deployed length, m
};

/// Torque triple plus the tilt commands that produced it.
struct AttitudeCommand {
  Eigen::Vector3d torques = Eigen::Vector3d::Zero();  // (U_phi, U_theta, U_psi)
  double phi_cmd = 0;
  double theta_cmd = 0;
  bool tilt_saturated = false;
};

/// Lyapunov value and its closed-form derivative for the altitude
/// error subsystem.
struct LyapunovPair {
  double value = 0;
  double derivative = 0;
};

/// Desired second derivative of an error coordinate under the two-step
/// backstepping pattern: with z1 = edot + k1*e the command
/// -(e + k2*z1 + k1*edot) makes z1dot = -k2*z1 - e.
double backstepping_accel(double error, double error_rate, const GainPair& gains);

/// Thrust realizing a requested vertical acceleration through the
/// vertical-axis dynamics row (rate coupling, gravity, tension, drag).
/// Throws Fault("gimbal-singular thrust") when |cos(theta)cos(phi)| <= 1e-6.
double thrust_from_vertical_accel(const TuavState& state, double accel_z,
                                  const TetherForce& tether,
                                  const SystemParams& params);

/// Backstepping altitude law on the error coordinate z - z_des.
double backstepping_altitude(const TuavState& state, double z_des,
                             const GainSet& gains, const TetherForce& tether,
                             const SystemParams& params);

/// (V, Vdot) of the altitude subsystem at the given state:
/// V = (x5^2 + z1^2)/2, Vdot = -k1*x5^2 - k2*z1^2.
LyapunovPair lyapunov_diagnostics(const TuavState& state, double z_des,
                                  const GainSet& gains);
LyapunovPair lyapunov_diagnostics(double x5, double x6, const GainPair& gains);

/// Roll/pitch commands realizing lateral accelerations through the
/// near-hover thrust projection, saturated to the configured tilt limit.
AttitudeCommand tilt_from_lateral_accel(double accel_x, double accel_y, double psi,
                                        double tilt_limit, const SystemParams& params);

/// Per-axis backstepping torques toward the commanded attitude, with the
/// gyroscopic coupling of each rotational row compensated exactly.
Eigen::Vector3d attitude_torques(const TuavState& state, double phi_cmd,
                                 double theta_cmd, double psi_des,
                                 const GainSet& gains, const SystemParams& params);

/// Combined lateral-position-to-tilt mapping and attitude torque laws.
AttitudeCommand attitude_and_lateral_nominal(const TuavState& state,
                                             const Setpoint& sp, const GainSet& gains,
                                             const SystemParams& params);

/// Winch torque steering the deployed length toward the target, with the
/// viscous-friction term compensated.
double winch_nominal(const TuavState& state, double length_des, const GainSet& gains,
                     const SystemParams& params);

/// PD acceleration command for the point-mass model.
Eigen::Vector3d point_mass_nominal(const PointMassState& state, const Setpoint& sp,
                                   const GainSet& gains);

}  // namespace tuav
