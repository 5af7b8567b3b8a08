#pragma once

// Generic hyperbolic-parabolic reduction: a coupled 2x2 symbol collapses to a
// third-order-in-time cubic per frequency, solved by Lagrange-interpolation
// kernels with the symbol's roots. Instantiated for the plate system and for
// 1D thermoelasticity.

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "teplab/roots.hpp"

namespace teplab {

struct DegenerateRootsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cubic coefficients c2(r), c1(r), c0(r) of the reduced symbol
/// lambda^3 + c2 lambda^2 + c1 lambda + c0 = 0, plus the induced second
/// initial condition utt(0) as a function of (r, u0hat, u1hat, th0hat).
struct CoupledSymbol {
  std::string name;
  std::function<double(double)> c2, c1, c0;
  std::function<complexd(double, complexd, complexd, complexd)> second_ic;
};

/// Plate system: (r^2, 2 r^4, r^6) with utt(0) = -r^4 u0 + r^2 th0.
inline CoupledSymbol reduce_plate() {
  CoupledSymbol s;
  s.name = "plate";
  s.c2 = [](double r) { return r * r; };
  s.c1 = [](double r) { return 2.0 * r * r * r * r; };
  s.c0 = [](double r) { return r * r * r * r * r * r; };
  s.second_ic = [](double r, complexd u0, complexd, complexd th0) {
    const double r2 = r * r;
    return -r2 * r2 * u0 + r2 * th0;
  };
  return s;
}

/// 1D thermoelasticity: (kappa r^2, (g1 g2 + alpha) r^2, kappa alpha r^4)
/// with utt(0) = -alpha r^2 u0 - i g1 r th0 (first-derivative coupling).
inline CoupledSymbol reduce_thermoelastic_1d(double alpha, double kappa, double gamma1,
                                             double gamma2) {
  if (!(alpha > 0.0)) throw std::invalid_argument("thermoelastic_1d: alpha must be positive");
  if (!(kappa > 0.0)) throw std::invalid_argument("thermoelastic_1d: kappa must be positive");
  if (!(gamma1 * gamma2 > 0.0))
    throw std::invalid_argument("thermoelastic_1d: gamma1*gamma2 must be positive");
  CoupledSymbol s;
  s.name = "thermoelastic-1d";
  s.c2 = [kappa](double r) { return kappa * r * r; };
  s.c1 = [alpha, gamma1, gamma2](double r) { return (gamma1 * gamma2 + alpha) * r * r; };
  s.c0 = [alpha, kappa](double r) { return kappa * alpha * r * r * r * r; };
  s.second_ic = [alpha, gamma1](double r, complexd u0, complexd, complexd th0) {
    return -alpha * r * r * u0 - complexd{0.0, 1.0} * gamma1 * r * th0;
  };
  return s;
}

struct LagrangeSolution {
  complexd u;       // uhat(t)
  complexd u_t;     // first derivative
  complexd u_tt;    // second derivative
  complexd u_ttt;   // third derivative (for residual checks against the cubic)
  std::array<complexd, 3> roots;
};

/// Solve the symbol's cubic at frequency r, build the Lagrange-interpolation
/// solution for the data triple (u(0), u'(0), u''(0)) and evaluate at t.
/// Near-coincident roots are refused (no confluent formula here).
inline LagrangeSolution lagrange_kernels(const CoupledSymbol& sym, double t, double r,
                                         const std::array<complexd, 3>& data) {
  const auto lam = characteristic_roots_general(sym.c2(r), sym.c1(r), sym.c0(r));
  double scale = 1.0;
  for (const auto& z : lam) scale = std::max(scale, std::abs(z));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(lam[i] - lam[j]) < 1e-6 * scale)
        throw DegenerateRootsError("lagrange_kernels: near-coincident characteristic roots at r=" +
                                   std::to_string(r));

  Eigen::Matrix3cd vand;
  for (int col = 0; col < 3; ++col) {
    vand(0, col) = 1.0;
    vand(1, col) = lam[col];
    vand(2, col) = lam[col] * lam[col];
  }
  const Eigen::Vector3cd rhs(data[0], data[1], data[2]);
  const Eigen::Vector3cd coeff = vand.colPivHouseholderQr().solve(rhs);

  LagrangeSolution out;
  out.roots = lam;
  out.u = out.u_t = out.u_tt = out.u_ttt = 0.0;
  for (int j = 0; j < 3; ++j) {
    const complexd e = coeff[j] * std::exp(lam[j] * t);
    out.u += e;
    out.u_t += lam[j] * e;
    out.u_tt += lam[j] * lam[j] * e;
    out.u_ttt += lam[j] * lam[j] * lam[j] * e;
  }
  return out;
}

}  // namespace teplab
