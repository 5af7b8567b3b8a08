#pragma once

// Characteristic roots of the reduced third-order symbol.
//
// The plate symbol factors through the scaled cubic mu^3 + mu^2 + 2mu + 1 = 0
// (one real root, one conjugate pair); every frequency reuses the same mu's
// via lambda_j = mu_j * r^2, so the cubic is solved exactly once.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace teplab {

using complexd = std::complex<double>;

/// Scaled roots of mu^3 + mu^2 + 2mu + 1 = 0 and the derived constants.
/// mu1 = -a0, mu_{2,3} = -a1 -/+ i*a2 with a0, a1, a2 > 0.
struct CharRoots {
  double mu_real;        // the real root mu1
  double mu_complex_re;  // real part of the conjugate pair
  double mu_complex_im;  // |imag part| of the conjugate pair
  double a0, a1, a2;
  double alpha_plus, alpha_minus;

  double delta() const { return a0 - a1; }                       // = alpha_-/2 > 0
  double denom() const { return delta() * delta() + a2 * a2; }   // (a0-a1)^2 + a2^2

  std::array<complexd, 3> mu() const {
    return {complexd{mu_real, 0.0}, complexd{mu_complex_re, -mu_complex_im},
            complexd{mu_complex_re, mu_complex_im}};
  }
  std::array<complexd, 3> lambda(double r) const {
    const double r2 = r * r;
    auto m = mu();
    return {m[0] * r2, m[1] * r2, m[2] * r2};
  }
};

namespace detail {

inline complexd horner_cubic(double c2, double c1, double c0, complexd z) {
  return ((z + c2) * z + c1) * z + c0;
}

inline complexd cubic_deriv(double c2, double c1, complexd z) {
  return (3.0 * z + 2.0 * c2) * z + c1;
}

}  // namespace detail

/// Roots of lambda^3 + c2 lambda^2 + c1 lambda + c0 = 0 for real coefficients.
/// Trigonometric branch when all three roots are real, Cardano otherwise,
/// followed by one Newton polish per root. Conjugate pairing is enforced.
inline std::array<complexd, 3> characteristic_roots_general(double c2, double c1, double c0) {
  if (!std::isfinite(c2) || !std::isfinite(c1) || !std::isfinite(c0))
    throw std::invalid_argument("characteristic_roots_general: non-finite coefficient");

  // depressed form y^3 + 3py + 2q with lambda = y - c2/3
  const double shift = c2 / 3.0;
  const double p = c1 / 3.0 - shift * shift;
  const double q2 = c2 * c2 * c2 / 27.0 - c2 * c1 / 6.0 + c0 / 2.0;
  const double disc = q2 * q2 + p * p * p;

  std::array<complexd, 3> roots;
  if (disc < 0.0) {
    // three distinct real roots
    const double rho = std::sqrt(-p);
    double arg = q2 / (rho * rho * rho);
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    constexpr double tau = 2.0 * std::numbers::pi / 3.0;
    for (int k = 0; k < 3; ++k)
      roots[k] = complexd{-2.0 * rho * std::cos(phi - tau * k) - shift, 0.0};
  } else {
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(-q2 + sq);
    const double v = std::cbrt(-q2 - sq);
    roots[0] = complexd{u + v - shift, 0.0};
    const double re = -0.5 * (u + v) - shift;
    const double im = 0.5 * std::sqrt(3.0) * (u - v);
    roots[1] = complexd{re, -im};
    roots[2] = complexd{re, im};
  }

  // one Newton step per root, skipped near-degenerate derivatives
  for (auto& z : roots) {
    const complexd dp = detail::cubic_deriv(c2, c1, z);
    if (std::abs(dp) > 1e-30) z -= detail::horner_cubic(c2, c1, c0, z) / dp;
  }
  // re-enforce exact conjugacy after polishing
  if (roots[1].imag() != 0.0) {
    const double re = 0.5 * (roots[1].real() + roots[2].real());
    const double im = 0.5 * (roots[2].imag() - roots[1].imag());
    roots[1] = {re, -im};
    roots[2] = {re, im};
  }

  const double scale = std::max({1.0, std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2])});
  for (const auto& z : roots) {
    if (std::abs(detail::horner_cubic(c2, c1, c0, z)) > 1e-10 * scale * scale * scale)
      throw std::runtime_error("characteristic_roots_general: residual check failed");
  }
  return roots;
}

/// Solve the plate cubic once and derive all constants, cross-checking the
/// root solver against the closed radical formulas to 1e-12.
inline CharRoots solve_characteristic_cubic() {
  const auto roots = characteristic_roots_general(1.0, 2.0, 1.0);

  CharRoots cr{};
  bool found_real = false;
  for (const auto& z : roots) {
    if (z.imag() == 0.0) {
      cr.mu_real = z.real();
      found_real = true;
    } else if (z.imag() > 0.0) {
      cr.mu_complex_re = z.real();
      cr.mu_complex_im = z.imag();
    }
  }
  if (!found_real || cr.mu_complex_im <= 0.0)
    throw std::logic_error("plate cubic must have one real root and a conjugate pair");

  cr.a0 = -cr.mu_real;
  cr.a1 = -cr.mu_complex_re;
  cr.a2 = cr.mu_complex_im;

  const double s69 = std::sqrt(69.0);
  cr.alpha_plus = std::cbrt(0.5 * (3.0 * s69 + 11.0)) + std::cbrt(0.5 * (3.0 * s69 - 11.0));
  cr.alpha_minus = std::cbrt(0.5 * (3.0 * s69 + 11.0)) - std::cbrt(0.5 * (3.0 * s69 - 11.0));

  // radical route must agree with the solver route
  const double a0r = (1.0 + cr.alpha_minus) / 3.0;
  const double a1r = (2.0 - cr.alpha_minus) / 6.0;
  const double a2r = std::sqrt(3.0) * cr.alpha_plus / 6.0;
  if (std::abs(cr.a0 - a0r) > 1e-12 * a0r || std::abs(cr.a1 - a1r) > 1e-12 * a1r ||
      std::abs(cr.a2 - a2r) > 1e-12 * a2r)
    throw std::logic_error("cubic solver disagrees with radical formulas");

  // Vieta residuals on mu^3 + mu^2 + 2mu + 1
  const double v1 = cr.mu_real + 2.0 * cr.mu_complex_re + 1.0;
  const double mod2 = cr.mu_complex_re * cr.mu_complex_re + cr.mu_complex_im * cr.mu_complex_im;
  const double v2 = cr.mu_real * mod2 + 1.0;
  const double v3 = 2.0 * cr.mu_real * cr.mu_complex_re + mod2 - 2.0;
  if (std::abs(v1) > 1e-10 || std::abs(v2) > 1e-10 || std::abs(v3) > 1e-10)
    throw std::logic_error("plate cubic Vieta residual exceeds 1e-10");

  return cr;
}

/// Cached process-wide constants (the cubic is constant-coefficient).
inline const CharRoots& plate_roots() {
  static const CharRoots cr = solve_characteristic_cubic();
  return cr;
}

}  // namespace teplab
