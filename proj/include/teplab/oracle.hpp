#pragma once

// Independent per-frequency time integrator: classical RK4 with step doubling
// and Richardson error control. Ground truth for every closed form in the
// project; nothing here knows about the kernel representations.

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "teplab/roots.hpp"

namespace teplab {

using State3 = Eigen::Vector3cd;

struct StiffnessError : std::runtime_error {
  StiffnessError(double r, double epsilon)
      : std::runtime_error("oracle: step underflow (dt < 1e-14) at r=" + std::to_string(r) +
                           ", epsilon=" + std::to_string(epsilon)) {}
};

namespace detail {

template <class Rhs>
State3 rk4_step(const Rhs& f, double t, const State3& y, double h) {
  const State3 k1 = f(t, y);
  const State3 k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
  const State3 k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
  const State3 k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace detail

struct IntegrateOptions {
  double dt_initial = 0.0;   // 0 -> derived from dt_max
  double dt_max = 0.1;
  double step_tol = 1e-12;   // Richardson estimate per step, relative to state scale
  double dt_min = 1e-14;
  double r = 0.0, epsilon = 1.0;  // context for the stiffness report
};

/// Integrate y' = f(t, y) to t_end. Each step is taken once with h and twice
/// with h/2; the Richardson estimate |y2 - y1|/15 drives accept/reject and the
/// accepted value is the extrapolated one.
template <class Rhs>
State3 integrate_rk4(State3 y, const Rhs& f, double t_end, IntegrateOptions opt) {
  if (t_end < 0.0) throw std::invalid_argument("integrate_rk4: t_end must be >= 0");
  if (t_end == 0.0) return y;
  if (t_end / opt.dt_max > 1e9) throw StiffnessError(opt.r, opt.epsilon);
  double h = opt.dt_initial > 0.0 ? opt.dt_initial : std::min(opt.dt_max, t_end / 8.0);
  h = std::min(h, t_end);
  double t = 0.0;
  while (t < t_end) {
    h = std::min(h, t_end - t);
    const State3 y1 = detail::rk4_step(f, t, y, h);
    const State3 ym = detail::rk4_step(f, t, y, 0.5 * h);
    const State3 y2 = detail::rk4_step(f, t + 0.5 * h, ym, 0.5 * h);
    const double scale = std::max({y.norm(), y2.norm(), 1e-30});
    const double err = (y2 - y1).norm() / 15.0;
    if (err <= opt.step_tol * scale) {
      y = y2 + (y2 - y1) / 15.0;
      t += h;
      if (err < 0.03125 * opt.step_tol * scale) h = std::min(2.0 * h, opt.dt_max);
    } else {
      h *= 0.5;
      if (h < opt.dt_min) throw StiffnessError(opt.r, opt.epsilon);
    }
  }
  return y;
}

/// Per-frequency state of the coupled system for a given thermal parameter:
/// uhat_t = vhat, vhat_t = -r^4 uhat + r^2 thetahat,
/// thetahat_t = -(r^2/epsilon) (thetahat + vhat).
struct FrequencyODE {
  double r = 1.0;
  double epsilon = 1.0;
  State3 state = State3::Zero();  // (uhat, vhat, thetahat)
};

inline double coupled_dt_cap(double r, double epsilon) {
  const double r2 = std::max(r * r, 1e-300);
  // resolve the stiff thermal mode and the plate oscillation
  return std::min(0.1 * epsilon / r2, 0.1 / r2);
}

inline State3 integrate(const FrequencyODE& ode, double t_end, double dt_initial = 0.0) {
  if (!(ode.epsilon > 0.0)) throw std::invalid_argument("integrate: epsilon must be positive");
  const double r2 = ode.r * ode.r;
  const double r4 = r2 * r2;
  const double inv_eps = 1.0 / ode.epsilon;
  auto rhs = [=](double, const State3& y) {
    return State3(y[1], -r4 * y[0] + r2 * y[2], -r2 * inv_eps * (y[2] + y[1]));
  };
  IntegrateOptions opt;
  opt.dt_initial = dt_initial;
  opt.dt_max = coupled_dt_cap(ode.r, ode.epsilon);
  opt.r = ode.r;
  opt.epsilon = ode.epsilon;
  return integrate_rk4(ode.state, rhs, t_end, opt);
}

/// Third-order scalar equation for a general cubic symbol
/// u''' + c2 u'' + c1 u' + c0 u = 0; state (u, u', u'').
inline State3 integrate_cubic(double c2, double c1, double c0, double t_end, State3 data,
                              double dt_cap) {
  auto rhs = [=](double, const State3& y) {
    return State3(y[1], y[2], -(c2 * y[2] + c1 * y[1] + c0 * y[0]));
  };
  IntegrateOptions opt;
  opt.dt_max = dt_cap;
  return integrate_rk4(data, rhs, t_end, opt);
}

/// Reduced plate equation; the induced second initial condition
/// u_tt(0) = -r^4 u0 + r^2 th0 is supplied by the caller through data[2].
inline State3 integrate_third_order(double r, double t_end, State3 data) {
  const double r2 = r * r;
  return integrate_cubic(r2, 2.0 * r2 * r2, r2 * r2 * r2, t_end, data,
                         0.1 / std::max(r2, 1e-300));
}

/// 1D thermoelasticity at frequency r (xi = +r):
/// uhat_t = vhat, vhat_t = -alpha r^2 uhat - i gamma1 r thetahat,
/// thetahat_t = -kappa r^2 thetahat - i gamma2 r vhat.
inline State3 integrate_thermo1d(double alpha, double kappa, double gamma1, double gamma2,
                                 double r, double t_end, State3 data) {
  const double r2 = r * r;
  const complexd i{0.0, 1.0};
  auto rhs = [=](double, const State3& y) {
    return State3(y[1], -alpha * r2 * y[0] - i * gamma1 * r * y[2],
                  -kappa * r2 * y[2] - i * gamma2 * r * y[1]);
  };
  IntegrateOptions opt;
  const double scale = std::max({alpha * r2, kappa * r2, std::abs(gamma1 * gamma2) * r2, 1e-300});
  opt.dt_max = 0.5 / std::sqrt(scale);
  opt.r = r;
  return integrate_rk4(data, rhs, t_end, opt);
}

/// Error system of the vanishing-parameter family, state (U, V, W):
/// U_t = V, V_t = W,
/// eps W_t + r^2 W + (1+eps) r^4 V + r^6 U = eps r^2 F(t).
inline State3 integrate_error_system(double epsilon, double r, State3 y0, double t_end,
                                     const std::function<complexd(double)>& source = {}) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("integrate_error_system: epsilon > 0 required");
  const double r2 = r * r;
  const double r4 = r2 * r2, r6 = r4 * r2;
  const double inv_eps = 1.0 / epsilon;
  auto rhs = [=, &source](double t, const State3& y) {
    complexd f = source ? source(t) : complexd{0.0, 0.0};
    return State3(y[1], y[2],
                  inv_eps * (epsilon * r2 * f - r2 * y[2] - (1.0 + epsilon) * r4 * y[1] - r6 * y[0]));
  };
  IntegrateOptions opt;
  opt.dt_max = coupled_dt_cap(r, epsilon);
  opt.r = r;
  opt.epsilon = epsilon;
  return integrate_rk4(y0, rhs, t_end, opt);
}

}  // namespace teplab
