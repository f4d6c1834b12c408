#include "tuav/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tuav {

namespace {

const char* kRowNames[TuavState::kDim] = {
    "xdot", "ydot", "zdot", "phidot", "thetadot", "psidot", "xddot",
    "yddot", "zddot", "pdot", "qdot", "rdot", "winch_rate", "winch_accel"};

}  // namespace

void SystemParams::validate() const {
  auto positive = [](double value, const char* name) {
    if (!(value > 0) || !std::isfinite(value))
      throw Fault(std::string("SystemParams: ") + name + " must be > 0");
  };
  positive(m, "m");
  positive(ixx, "ixx");
  positive(iyy, "iyy");
  positive(izz, "izz");
  positive(l_max, "l_max");
  positive(i_w, "i_w");
  positive(r_w, "r_w");
  if (!(k_t >= 0)) throw Fault("SystemParams: k_t must be >= 0");
}

TuavState::Vector TuavState::to_vector() const {
  Vector out;
  out << x, y, z, phi, theta, psi, u, v, w, p, q, r, winch_angle, winch_rate;
  return out;
}

TuavState TuavState::from_vector(const Vector& v) {
  TuavState s;
  s.x = v[0];
  s.y = v[1];
  s.z = v[2];
  s.phi = v[3];
  s.theta = v[4];
  s.psi = v[5];
  s.u = v[6];
  s.v = v[7];
  s.w = v[8];
  s.p = v[9];
  s.q = v[10];
  s.r = v[11];
  s.winch_angle = v[12];
  s.winch_rate = v[13];
  return s;
}

bool ControlInput::all_finite() const {
  return std::isfinite(thrust) && std::isfinite(torque_roll) &&
         std::isfinite(torque_pitch) && std::isfinite(torque_yaw) &&
         std::isfinite(winch_torque);
}

TetherForce tether_force(const TuavState& state, const SystemParams& params) {
  TetherForce out;
  const Eigen::Vector3d xi = state.position();
  const double r = xi.norm();
  if (r > 1e-12) {
    out.elevation = std::atan2(xi.z(), std::hypot(xi.x(), xi.y()));
    out.azimuth = std::atan2(xi.x(), xi.y());
  }
  const double deployed = state.deployed_length(params);
  const double stretch = r - deployed;
  if (stretch <= 0) return out;  // slack
  out.magnitude = params.k_t * stretch;
  const double ca = std::cos(out.elevation);
  out.components = out.magnitude * Eigen::Vector3d(ca * std::sin(out.azimuth),
                                                   ca * std::cos(out.azimuth),
                                                   std::sin(out.elevation));
  return out;
}

TuavDerivative tuav_derivative(const TuavState& s, const ControlInput& in,
                               const TetherForce& tether, const SystemParams& pr) {
  const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
  const double cth = std::cos(s.theta), sth = std::sin(s.theta);
  const double cpsi = std::cos(s.psi), spsi = std::sin(s.psi);
  const double t1 = tether.magnitude;
  const double ca = std::cos(tether.elevation), sa = std::sin(tether.elevation);
  const double cb = std::cos(tether.azimuth), sb = std::sin(tether.azimuth);

  TuavDerivative d;
  d[0] = s.u;
  d[1] = s.v;
  d[2] = s.w;
  d[3] = s.p;
  d[4] = s.q;
  d[5] = s.r;
  // Translational accelerations with thrust projection, rate coupling,
  // gravity, tether tension and linear drag.
  d[6] = (in.thrust * (cpsi * cphi * sth + spsi * sphi) + pr.m * s.r * s.v -
          pr.m * s.q * s.w - pr.m * pr.g * sth - t1 * ca * sb - pr.ax * s.u) /
         pr.m;
  d[7] = (in.thrust * (cphi * spsi * sth - cpsi * sphi) + pr.m * s.r * s.u -
          pr.m * s.p * s.w - pr.m * pr.g * cth * sphi + t1 * ca * cb +
          pr.ay * s.v) /
         pr.m;
  d[8] = (in.thrust * cth * cphi + pr.m * s.q * s.u - pr.m * s.p * s.v +
          pr.m * pr.g * cth * cphi - t1 * sa - pr.az * s.w) /
         pr.m;
  // Rotational accelerations with gyroscopic coupling.
  d[9] = (in.torque_roll - s.q * s.r * (pr.iyy - pr.izz)) / pr.ixx;
  d[10] = (in.torque_pitch + s.p * s.r * (pr.ixx - pr.izz)) / pr.iyy;
  d[11] = (in.torque_yaw - s.p * s.q * (pr.ixx - pr.iyy)) / pr.izz;
  // Winch: viscous friction against the winch torque through the drum radius.
  d[12] = s.winch_rate;
  d[13] = (-pr.beta_w * s.winch_rate + pr.r_w * in.winch_torque) / pr.i_w;

  for (int i = 0; i < TuavState::kDim; ++i) {
    if (!std::isfinite(d[i]))
      throw Fault(std::string("tuav_derivative: non-finite row ") + kRowNames[i]);
  }
  return d;
}

PointMassState::Vector point_mass_derivative(const PointMassState& state,
                                             const Eigen::Vector3d& accel) {
  PointMassState::Vector d;
  d << state.velocity, accel;
  return d;
}

namespace detail {
void require_stage_finite(const double* data, int n, const char* stage) {
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(data[i]))
      throw Fault(std::string("rk4_step: non-finite stage ") + stage);
  }
}
}  // namespace detail

TuavState rk4_step(const TuavState& state, const ControlInput& input,
                   const SystemParams& params, double dt) {
  auto deriv = [&](const TuavState::Vector& v) -> TuavState::Vector {
    const TuavState s = TuavState::from_vector(v);
    return tuav_derivative(s, input, tether_force(s, params), params);
  };
  return TuavState::from_vector(rk4_step(deriv, state.to_vector(), dt));
}

PointMassState rk4_step(const PointMassState& state, const Eigen::Vector3d& accel,
                        double dt) {
  auto deriv = [&](const PointMassState::Vector& v) -> PointMassState::Vector {
    return point_mass_derivative(PointMassState::from_vector(v), accel);
  };
  return PointMassState::from_vector(rk4_step(deriv, state.to_vector(), dt));
}

}  // namespace tuav
