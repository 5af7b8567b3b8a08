#pragma once

// Large-time profile multipliers Jhat_0..Jhat_3, the combined data Psi_0 and
// Psi_1, and the structurally damped plate formulas (uhat^0, uhat^0_t) plus
// the Duhamel corrector uhat^{I,1} used by the vanishing-parameter runs.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "teplab/kernels.hpp"
#include "teplab/quadrature.hpp"
#include "teplab/roots.hpp"

namespace teplab {

/// Jhat_j(t, r) for j = 0..3. j = 0, 1 are the r^-2-lifted plate-diffusion
/// multipliers in stabilized form; j = 2, 3 apply (r^-2 d_t^2 + r^2)
/// analytically (they are plain psi-basis combinations, finite at r = 0).
inline double eval_J(int j, double t, double r, const CharRoots& cr = plate_roots()) {
  if (j < 0 || j > 3) throw std::invalid_argument("eval_J: index must be 0..3");
  if (t < 0.0) throw std::invalid_argument("eval_J: negative t rejected");
  if (r < 0.0) throw std::invalid_argument("eval_J: negative r rejected");
  const double D = cr.denom(), delta = cr.delta();
  const double a0 = cr.a0, a1 = cr.a1, a2 = cr.a2;
  const double s = r * r * t;
  const double e1 = std::exp(-a1 * s);
  switch (j) {
    case 0: {
      // (exp(-a0 s) - cos(a2 s) exp(-a1 s)) / (D r^2) rewritten through
      // 1 - cos y = 2 sin^2(y/2); both pieces stay O(1) relative.
      PlateKernelCore core(cr);
      if (s == 0.0) return -t * delta / D;
      const double half = std::sin(0.5 * a2 * s);
      return (t / D) * (2.0 * half * half / s * e1 - delta * core.decay_factor(s));
    }
    case 1: {
      PlateKernelCore core(cr);
      return (t / D) * core.sinc_a2(s) * e1;
    }
    case 2:
      return ((1.0 + a0 * a0) * std::exp(-a0 * s) -
              ((1.0 + a1 * a1 - a2 * a2) * std::cos(a2 * s) + 2.0 * a1 * a2 * std::sin(a2 * s)) * e1) /
             D;
    case 3:
      return ((1.0 + a1 * a1 - a2 * a2) * std::sin(a2 * s) - 2.0 * a1 * a2 * std::cos(a2 * s)) * e1 /
             (a2 * D);
  }
  return 0.0;  // unreachable
}

/// Combined data Psi_0 = 2 a1 u1 + th0, Psi_1 = (a0^2+a2^2-a1^2) u1 + (a0-a1) th0,
/// applied pointwise to Fourier values.
struct CombinedCoefficients {
  double c_u1_0, c_th0_0;  // Psi_0 slots
  double c_u1_1, c_th0_1;  // Psi_1 slots
};

inline CombinedCoefficients combined_coefficients(const CharRoots& cr = plate_roots()) {
  return {2.0 * cr.a1, 1.0, cr.a0 * cr.a0 + cr.a2 * cr.a2 - cr.a1 * cr.a1, cr.delta()};
}

struct CombinedData {
  RadialData psi0, psi1;
};

/// Build (Psi_0, Psi_1) from the (u1, th0) radial data.
inline CombinedData combine_data(const RadialData& u1, const RadialData& th0,
                                 const CharRoots& cr = plate_roots()) {
  const auto c = combined_coefficients(cr);
  auto p1 = u1.profile, p2 = th0.profile;
  CombinedData out;
  out.psi0 = RadialData{[=](double r) { return c.c_u1_0 * p1(r) + c.c_th0_0 * p2(r); },
                        c.c_u1_0 * u1.mean + c.c_th0_0 * th0.mean,
                        std::abs(c.c_u1_0) * u1.lip + std::abs(c.c_th0_0) * th0.lip};
  out.psi1 = RadialData{[=](double r) { return c.c_u1_1 * p1(r) + c.c_th0_1 * p2(r); },
                        c.c_u1_1 * u1.mean + c.c_th0_1 * th0.mean,
                        std::abs(c.c_u1_1) * u1.lip + std::abs(c.c_th0_1) * th0.lip};
  return out;
}

/// Structurally damped plate in Fourier space: uhat^0 and uhat^0_t for data
/// (u0hat, u1hat). Damped oscillator with frequency (sqrt(3)/2) r^2 and decay
/// exp(-r^2 t / 2); r = 0 limit is u0 + t u1.
template <typename C>
std::pair<C, C> eval_u0_hat(double t, double r, const C& u0hat, const C& u1hat) {
  if (t < 0.0) throw std::invalid_argument("eval_u0_hat: negative t rejected");
  constexpr double rt3 = std::numbers::sqrt3;
  const double r2 = r * r;
  const double s = r2 * t;
  const double w = 0.5 * rt3 * s;
  const double e = std::exp(-0.5 * s);
  const double sw = std::sin(w), cw = std::cos(w);
  const double sinc = (w == 0.0) ? 1.0 : sw / w;
  const C u = e * ((sw / rt3 + cw) * u0hat + t * sinc * u1hat);
  const C ut = e * (-(2.0 / rt3) * r2 * sw * u0hat + (cw - sw / rt3) * u1hat);
  return {u, ut};
}

/// Analytic second time derivative of uhat^0 (for residual checks):
/// uhat^0_tt = -r^4 uhat^0 - r^2 uhat^0_t.
template <typename C>
C eval_u0_hat_tt(double t, double r, const C& u0hat, const C& u1hat) {
  const auto [u, ut] = eval_u0_hat(t, r, u0hat, u1hat);
  const double r2 = r * r;
  return -r2 * r2 * u - r2 * ut;
}

struct DuhamelResult {
  complexd value;      // uhat^{I,1}
  complexd value_t;    // d/dt uhat^{I,1}
  double achieved_tol; // absolute error estimate of the quadrature
  bool converged;
};

/// Second-order corrector by Duhamel quadrature:
///   uhat^{I,1}(t,r) = -(2/sqrt3) int_0^t sin(w0 (t-tau)) exp(-r^2 (t-tau)/2)
///                      (r^2 uhat^0 + uhat^0_t)(tau) dtau,  w0 = (sqrt3/2) r^2,
/// with the derivative obtained from the differentiated impulse response.
inline DuhamelResult eval_uI1_hat(double t, double r, complexd u0hat, complexd u1hat,
                                  double abs_tol = 1e-11) {
  if (t < 0.0) throw std::invalid_argument("eval_uI1_hat: negative t rejected");
  constexpr double rt3 = std::numbers::sqrt3;
  const double r2 = r * r;
  const double w0 = 0.5 * rt3 * r2;
  if (t == 0.0 || r == 0.0) return {0.0, 0.0, 0.0, true};

  auto forcing = [&](double tau) {
    const auto [u, ut] = eval_u0_hat(tau, r, u0hat, u1hat);
    return r2 * u + ut;
  };
  // real and imaginary parts integrated separately through the scalar GK core
  auto run = [&](auto&& weight, int part) {
    auto f = [&](double tau) {
      const complexd v = weight(t - tau) * forcing(tau);
      return part == 0 ? v.real() : v.imag();
    };
    // resolve both the oscillation (period 2 pi / w0) and the decay
    const double piece = std::min(t, 0.25 * (2.0 * std::numbers::pi) / std::max(w0, 1e-300));
    const double step = std::max(std::min(piece, t / 8.0), t / 4000.0);
    const int count = static_cast<int>(std::ceil(t / step));
    std::vector<double> bp(count + 1);
    for (int i = 0; i <= count; ++i) bp[i] = t * i / count;
    return integrate_adaptive(f, bp, abs_tol, 1e-13);
  };
  auto sin_kernel = [&](double dt) { return std::sin(w0 * dt) * std::exp(-0.5 * r2 * dt); };
  auto dsin_kernel = [&](double dt) {
    return (std::cos(w0 * dt) - std::sin(w0 * dt) / rt3) * std::exp(-0.5 * r2 * dt);
  };

  const auto vre = run(sin_kernel, 0);
  const auto vim = run(sin_kernel, 1);
  const auto dre = run(dsin_kernel, 0);
  const auto dim = run(dsin_kernel, 1);

  DuhamelResult out;
  out.value = -(2.0 / rt3) * complexd{vre.value, vim.value};
  out.value_t = -r2 * complexd{dre.value, dim.value};
  out.achieved_tol = (2.0 / rt3) * (vre.abs_err + vim.abs_err) + r2 * (dre.abs_err + dim.abs_err);
  out.converged = vre.converged && vim.converged && dre.converged && dim.converged;
  return out;
}

}  // namespace teplab
