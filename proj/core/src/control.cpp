#include "tuav/control.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tuav {

namespace {

void check_pair(const GainPair& pair, const char* name) {
  if (!(pair.k1 > 0) || !(pair.k2 > 0))
    throw Fault(std::string("GainSet: ") + name + " gains must be > 0");
}

}  // namespace

void GainSet::validate() const {
  check_pair(altitude, "altitude");
  check_pair(lateral_x, "lateral_x");
  check_pair(lateral_y, "lateral_y");
  check_pair(roll, "roll");
  check_pair(pitch, "pitch");
  check_pair(yaw, "yaw");
  check_pair(winch, "winch");
  if (!(kp > 0)) throw Fault("GainSet: kp must be > 0");
  if (!(kd > 0)) throw Fault("GainSet: kd must be > 0");
  if (!(tilt_limit > 0)) throw Fault("GainSet: tilt_limit must be > 0");
}

double backstepping_accel(double error, double error_rate, const GainPair& g) {
  const double z1 = error_rate + g.k1 * error;
  return -(error + g.k2 * z1 + g.k1 * error_rate);
}

double thrust_from_vertical_accel(const TuavState& s, double accel_z,
                                  const TetherForce& tether,
                                  const SystemParams& pr) {
  const double cc = std::cos(s.theta) * std::cos(s.phi);
  if (std::abs(cc) <= 1e-6) throw Fault("gimbal-singular thrust");
  const double sa = std::sin(tether.elevation);
  // Invert the vertical dynamics row for U_f.
  return (pr.m * accel_z - pr.m * s.q * s.u + pr.m * s.p * s.v -
          pr.m * pr.g * cc + tether.magnitude * sa + pr.az * s.w) /
         cc;
}

double backstepping_altitude(const TuavState& s, double z_des, const GainSet& gains,
                             const TetherForce& tether, const SystemParams& pr) {
  const double accel = backstepping_accel(s.z - z_des, s.w, gains.altitude);
  return thrust_from_vertical_accel(s, accel, tether, pr);
}

LyapunovPair lyapunov_diagnostics(double x5, double x6, const GainPair& g) {
  const double z1 = x6 + g.k1 * x5;
  return {0.5 * x5 * x5 + 0.5 * z1 * z1, -g.k1 * x5 * x5 - g.k2 * z1 * z1};
}

LyapunovPair lyapunov_diagnostics(const TuavState& s, double z_des,
                                  const GainSet& gains) {
  return lyapunov_diagnostics(s.z - z_des, s.w, gains.altitude);
}

AttitudeCommand tilt_from_lateral_accel(double accel_x, double accel_y, double psi,
                                        double tilt_limit, const SystemParams& pr) {
  AttitudeCommand cmd;
  // Small-angle inversion of the thrust-projection terms of the lateral
  // rows at hover thrust (U_f/m = -g); the attitude-coupled gravity terms
  // are left to feedback.
  const double tau = -pr.g;
  const double cpsi = std::cos(psi), spsi = std::sin(psi);
  double theta = (cpsi * accel_x + spsi * accel_y) / tau;
  double phi = (spsi * accel_x - cpsi * accel_y) / tau;
  cmd.tilt_saturated = std::abs(theta) > tilt_limit || std::abs(phi) > tilt_limit;
  cmd.theta_cmd = std::clamp(theta, -tilt_limit, tilt_limit);
  cmd.phi_cmd = std::clamp(phi, -tilt_limit, tilt_limit);
  return cmd;
}

Eigen::Vector3d attitude_torques(const TuavState& s, double phi_cmd,
                                 double theta_cmd, double psi_des,
                                 const GainSet& gains, const SystemParams& pr) {
  const double a_phi = backstepping_accel(s.phi - phi_cmd, s.p, gains.roll);
  const double a_theta = backstepping_accel(s.theta - theta_cmd, s.q, gains.pitch);
  const double a_psi = backstepping_accel(s.psi - psi_des, s.r, gains.yaw);
  return {pr.ixx * a_phi + s.q * s.r * (pr.iyy - pr.izz),
          pr.iyy * a_theta - s.p * s.r * (pr.ixx - pr.izz),
          pr.izz * a_psi + s.p * s.q * (pr.ixx - pr.iyy)};
}

AttitudeCommand attitude_and_lateral_nominal(const TuavState& s, const Setpoint& sp,
                                             const GainSet& gains,
                                             const SystemParams& pr) {
  const double ax = backstepping_accel(s.x - sp.position.x(), s.u - sp.velocity.x(),
                                       gains.lateral_x);
  const double ay = backstepping_accel(s.y - sp.position.y(), s.v - sp.velocity.y(),
                                       gains.lateral_y);
  AttitudeCommand cmd = tilt_from_lateral_accel(ax, ay, s.psi, gains.tilt_limit, pr);
  cmd.torques = attitude_torques(s, cmd.phi_cmd, cmd.theta_cmd, sp.yaw, gains, pr);
  return cmd;
}

double winch_nominal(const TuavState& s, double length_des, const GainSet& gains,
                     const SystemParams& pr) {
  const double deployed = s.deployed_length(pr);
  const double rate = pr.r_w * s.winch_rate;
  const double accel = backstepping_accel(deployed - length_des, rate, gains.winch);
  // Deployed-length acceleration maps back through the winch row.
  return (pr.i_w * accel / pr.r_w + pr.beta_w * s.winch_rate) / pr.r_w;
}

Eigen::Vector3d point_mass_nominal(const PointMassState& state, const Setpoint& sp,
                                   const GainSet& gains) {
  return gains.kp * (sp.position - state.position) +
         gains.kd * (sp.velocity - state.velocity);
}

}  // namespace tuav
