#pragma once

// Fourier-space solution kernels of the reduced third-order plate equation.
//
// Everything is evaluated through the scaled kernels kappa_j(s), s = r^2 t:
//
//   Khat_j(t, r) = kappa_j(s) / r^(2j),   d/dt Khat_j = r^(2(p-j)) kappa_j^(p)(s)
//
// kappa_j solves v''' + v'' + 2v' + v = 0 with e_j interpolation data, so it is
// a fixed linear combination of psi1 = exp(-a0 s), psi2 = cos(a2 s) exp(-a1 s),
// psi3 = sin(a2 s) exp(-a1 s). Two evaluation modes are kept side by side:
//
//   lagrange_sum — the literal root sums. Near s -> 0 they cancel
//     catastrophically (the r^-2 / r^-4 singularities of K1, K2).
//   stabilized  — the sin^2 / integral-factor rewriting, with a power-series
//     branch for small s and hardcoded r = 0 limits.

#include <array>
#include <complex>
#include <stdexcept>

#include "teplab/roots.hpp"
#include "teplab/scalar.hpp"

namespace teplab {

enum class KernelMode { lagrange_sum, stabilized };

/// exp(z)*... coefficients of the three Lagrange terms for kernel j.
/// kappa_j(s) = sum_m c[j][m] * exp(mu_m * s).
inline std::array<std::array<complexd, 3>, 3> lagrange_coefficients(const CharRoots& cr) {
  const auto mu = cr.mu();
  std::array<std::array<complexd, 3>, 3> c{};
  for (int m = 0; m < 3; ++m) {
    const complexd other0 = mu[(m + 1) % 3];
    const complexd other1 = mu[(m + 2) % 3];
    const complexd den = (mu[m] - other0) * (mu[m] - other1);
    c[0][m] = other0 * other1 / den;
    c[1][m] = -(other0 + other1) / den;
    c[2][m] = 1.0 / den;
  }
  return c;
}

/// Naive Lagrange sum for d^order/dt^order Khat_j at (t, r), any scalar type.
/// The slow factor exp(-a1 s) is pulled out of the sum so the remaining
/// exponents are a pure decay and a pure phase (no overflow on either side).
template <typename S>
std::complex<S> lagrange_kernel_dt(const CharRoots& cr, int j, int order, S t, S r) {
  const S r2 = r * r;
  const S s = r2 * t;
  const S a0 = static_cast<S>(cr.a0), a1 = static_cast<S>(cr.a1), a2 = static_cast<S>(cr.a2);
  const std::complex<S> mu[3] = {{-a0, S(0)}, {-a1, -a2}, {-a1, a2}};

  std::complex<S> sum{S(0), S(0)};
  for (int m = 0; m < 3; ++m) {
    const std::complex<S> o0 = mu[(m + 1) % 3];
    const std::complex<S> o1 = mu[(m + 2) % 3];
    const std::complex<S> den = (mu[m] - o0) * (mu[m] - o1);
    std::complex<S> coeff;
    switch (j) {
      case 0: coeff = o0 * o1 / den; break;
      case 1: coeff = -(o0 + o1) / den; break;
      case 2: coeff = S(1) / den; break;
      default: throw std::invalid_argument("kernel index must be 0, 1 or 2");
    }
    const std::complex<S> lam = mu[m] * r2;
    std::complex<S> amp{S(1), S(0)};
    for (int p = 0; p < order; ++p) amp *= lam;
    // exp(mu_m s) = exp(-a1 s) * exp((mu_m + a1) s)
    sum += coeff * amp * fp::cexp(std::complex<S>((mu[m].real() + a1) * s, mu[m].imag() * s));
  }
  const S scale = fp::exp(-a1 * s);
  // undo the r^(2j) scaling of the unit-frequency kernel
  S lift = S(1);
  for (int p = 0; p < j; ++p) lift *= r2;
  return sum * (scale / lift);
}

namespace detail {

// Taylor coefficients of kappa_j about s = 0 from the ODE recurrence
//   b_{k+3} = -(b_{k+2}(k+2)(k+1) + 2 b_{k+1}(k+1) + b_k) / ((k+3)(k+2)(k+1)).
inline constexpr int kSeriesTerms = 40;

struct KernelSeries {
  std::array<std::array<double, kSeriesTerms>, 3> b{};
  KernelSeries() {
    for (int j = 0; j < 3; ++j) {
      auto& c = b[j];
      c.fill(0.0);
      c[j] = (j == 2) ? 0.5 : 1.0;  // b_j = 1/j!
      for (int k = 0; k + 3 < kSeriesTerms; ++k) {
        const double kk = k;
        c[k + 3] = -(c[k + 2] * (kk + 2) * (kk + 1) + 2.0 * c[k + 1] * (kk + 1) + c[k]) /
                   ((kk + 3) * (kk + 2) * (kk + 1));
      }
    }
  }

  // d^order/ds^order kappa_j at small s
  double eval(int j, int order, double s) const {
    const auto& c = b[j];
    double acc = 0.0, pw = 1.0;
    for (int k = order; k < kSeriesTerms; ++k) {
      double f = 1.0;
      for (int q = 0; q < order; ++q) f *= static_cast<double>(k - q);
      acc += c[k] * f * pw;
      pw *= s;
    }
    return acc;
  }

  // kappa_j(s) / s^j at small s (finite as s -> 0)
  double eval_reduced(int j, double s) const {
    const auto& c = b[j];
    double acc = 0.0, pw = 1.0;
    for (int k = j; k < kSeriesTerms; ++k) {
      acc += c[k] * pw;
      pw *= s;
    }
    return acc;
  }

  // kappa_2'(s) / s at small s (finite as s -> 0)
  double eval_reduced_d1_k2(double s) const {
    const auto& c = b[2];
    double acc = 0.0, pw = 1.0;
    for (int k = 2; k < kSeriesTerms; ++k) {
      acc += c[k] * static_cast<double>(k) * pw;
      pw *= s;
    }
    return acc;
  }
};

inline const KernelSeries& kernel_series() {
  static const KernelSeries ks;
  return ks;
}

}  // namespace detail

/// Stabilized evaluation core for the plate kernels and the derived
/// multipliers, all as functions of the scaled variable s = r^2 t.
class PlateKernelCore {
 public:
  explicit PlateKernelCore(const CharRoots& cr = plate_roots())
      : cr_(cr), D_(cr.denom()), delta_(cr.delta()) {
    // psi-basis coefficients of kappa_j
    const double a0 = cr_.a0, a1 = cr_.a1, a2 = cr_.a2;
    c_[0] = {(a1 * a1 + a2 * a2) / D_, (a0 * a0 - 2.0 * a0 * a1) / D_,
             a0 * (a0 * a1 - a1 * a1 + a2 * a2) / (a2 * D_)};
    c_[1] = {2.0 * a1 / D_, -2.0 * a1 / D_, (a0 * a0 + a2 * a2 - a1 * a1) / (a2 * D_)};
    c_[2] = {1.0 / D_, -1.0 / D_, (a0 - a1) / (a2 * D_)};
  }

  const CharRoots& roots() const { return cr_; }

  /// d^order/ds^order of kappa_j.
  double kappa(int j, int order, double s) const {
    check_indices(j, order);
    if (s < kSeriesSwitch) return detail::kernel_series().eval(j, order, s);
    auto c = c_[j];
    for (int p = 0; p < order; ++p) c = dbasis(c);
    return eval_basis(c, s);
  }

  /// kappa_1(s)/s: the stabilized (sin^2 / integral-factor) form of K1 at
  /// unit frequency, finite and equal to 1 at s = 0.
  double g1(double s) const {
    if (s == 0.0) return 1.0;
    const double a1 = cr_.a1, a2 = cr_.a2;
    const double e1 = std::exp(-a1 * s);
    const double half = std::sin(0.5 * a2 * s);
    return (2.0 * a1 / D_) * (2.0 * half * half / s) * e1 -
           (2.0 * a1 * delta_ / D_) * decay_factor(s) +
           ((cr_.a0 * cr_.a0 + a2 * a2 - a1 * a1) / D_) * sinc_a2(s) * e1;
  }

  /// kappa_2(s)/s^2: stabilized K2 at unit frequency, -> 1/2 at s = 0.
  double g2(double s) const {
    if (s < kSeriesSwitch) return detail::kernel_series().eval_reduced(2, s);
    const double a1 = cr_.a1, a2 = cr_.a2;
    const double e1 = std::exp(-a1 * s);
    const double half = std::sin(0.5 * a2 * s) / s;
    const double bracket = (sinc_a2(s) * e1 - decay_factor(s)) / s;
    return (2.0 / D_) * half * half * e1 + (delta_ / D_) * bracket;
  }

  /// kappa_1(s)''+kappa_1(s) and kappa_2(s)''+kappa_2(s): theta-row lifts.
  double theta_lift(int j, double s) const {
    if (s < kSeriesSwitch) {
      const auto& ks = detail::kernel_series();
      return ks.eval(j, 2, s) + ks.eval(j, 0, s);
    }
    return kappa(j, 2, s) + kappa(j, 0, s);
  }

  /// (kappa_0 - kappa_2)'' + (kappa_0 - kappa_2); vanishes at s = 0.
  double theta_lift_u0(double s) const {
    if (s < kSeriesSwitch) {
      const auto& ks = detail::kernel_series();
      return (ks.eval(0, 2, s) - ks.eval(2, 2, s)) + (ks.eval(0, 0, s) - ks.eval(2, 0, s));
    }
    return (kappa(0, 2, s) - kappa(2, 2, s)) + (kappa(0, 0, s) - kappa(2, 0, s));
  }

  /// exp(-a0 s) * integral_0^1 exp(delta s tau) dtau, evaluated without 0/0
  /// and without overflowing the integral factor at large s.
  double decay_factor(double s) const {
    const double z = delta_ * s;
    if (z == 0.0) return std::exp(-cr_.a0 * s);
    if (z <= 0.5) return std::exp(-cr_.a0 * s) * std::expm1(z) / z;
    return (std::exp(-cr_.a1 * s) - std::exp(-cr_.a0 * s)) / z;
  }

  double sinc_a2(double s) const {
    const double z = cr_.a2 * s;
    if (std::fabs(z) < 1e-8) return 1.0 - z * z / 6.0;
    return std::sin(z) / z;
  }

  static constexpr double kSeriesSwitch = 0.0625;

 private:
  static void check_indices(int j, int order) {
    if (j < 0 || j > 2) throw std::invalid_argument("kernel index must be 0, 1 or 2");
    if (order < 0 || order > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
  }

  // derivative of a psi-basis combo in the same basis:
  // psi1' = -a0 psi1, psi2' = -a1 psi2 - a2 psi3, psi3' = a2 psi2 - a1 psi3
  std::array<double, 3> dbasis(const std::array<double, 3>& c) const {
    return {-cr_.a0 * c[0], -cr_.a1 * c[1] + cr_.a2 * c[2], -cr_.a2 * c[1] - cr_.a1 * c[2]};
  }

  double eval_basis(const std::array<double, 3>& c, double s) const {
    const double e1 = std::exp(-cr_.a1 * s);
    return c[0] * std::exp(-cr_.a0 * s) + (c[1] * std::cos(cr_.a2 * s) + c[2] * std::sin(cr_.a2 * s)) * e1;
  }

  CharRoots cr_;
  double D_, delta_;
  std::array<std::array<double, 3>, 3> c_;
};

/// Multiplier rows of the solution representation:
///   uhat     = u_u0 * u0hat + u_u1 * u1hat + u_th0 * th0hat
///   thetahat = th_u0 * u0hat + th_u1 * u1hat + th_th0 * th0hat
struct SolutionMultipliers {
  complexd u_u0, u_u1, u_th0;
  complexd th_u0, th_u1, th_th0;
};

class KernelSet {
 public:
  explicit KernelSet(KernelMode mode = KernelMode::stabilized,
                     const CharRoots& cr = plate_roots())
      : core_(cr), mode_(mode) {}

  const CharRoots& roots() const { return core_.roots(); }
  KernelMode mode() const { return mode_; }
  const PlateKernelCore& core() const { return core_; }

  /// Khat_j(t, r); r = 0 returns the analytic limit t^j / j!.
  complexd kernel(int j, double t, double r) const { return kernel_dt(j, 0, t, r); }

  /// d^order/dt^order Khat_j(t, r).
  complexd kernel_dt(int j, int order, double t, double r) const {
    if (j < 0 || j > 2 || order < 0 || order > 2)
      throw std::invalid_argument("kernel_dt: bad index");
    if (!(t >= 0.0) || !(r >= 0.0) || !std::isfinite(t) || !std::isfinite(r))
      throw std::invalid_argument("kernel_dt: t and r must be finite and >= 0");
    if (r == 0.0) return limit_at_r0(j, order, t);
    if (mode_ == KernelMode::lagrange_sum)
      return lagrange_kernel_dt<double>(core_.roots(), j, order, t, r);

    const double r2 = r * r;
    const double s = r2 * t;
    if (order == 0) {
      if (j == 0) return core_.kappa(0, 0, s);
      if (j == 1) return t * core_.g1(s);
      return t * t * core_.g2(s);
    }
    // r^(2(order-j)) kappa_j^(order)(s); negative powers rewritten through
    // the reduced forms so r -> 0 stays finite.
    const int pw = order - j;
    double val = core_.kappa(j, order, s);
    if (pw >= 0) {
      for (int p = 0; p < pw; ++p) val *= r2;
      return val;
    }
    // pw < 0 reaches here only for j = 2, order = 1 -> t * kappa_2'(s)/s
    if (s < PlateKernelCore::kSeriesSwitch)
      return t * detail::kernel_series().eval_reduced_d1_k2(s);
    return t * (core_.kappa(2, 1, s) / s);
  }

  SolutionMultipliers multipliers(double t, double r) const {
    SolutionMultipliers m;
    if (mode_ == KernelMode::lagrange_sum) {
      const double r2 = r * r, r4 = r2 * r2;
      const auto k0 = kernel(0, t, r);
      const auto k1 = kernel(1, t, r);
      const auto k2 = kernel(2, t, r);
      m.u_u0 = k0 - r4 * k2;
      m.u_u1 = k1;
      m.u_th0 = r2 * k2;
      if (r == 0.0) {
        m.th_u0 = 0.0; m.th_u1 = 0.0; m.th_th0 = 1.0;
        return m;
      }
      const auto d2 = [&](int j) { return kernel_dt(j, 2, t, r); };
      m.th_u0 = (d2(0) - r4 * d2(2)) / r2 + r2 * m.u_u0;
      m.th_u1 = d2(1) / r2 + r2 * k1;
      m.th_th0 = d2(2) + r4 * k2;
      return m;
    }
    if (r == 0.0) {
      m.u_u0 = 1.0; m.u_u1 = t; m.u_th0 = 0.0;
      m.th_u0 = 0.0; m.th_u1 = 0.0; m.th_th0 = 1.0;
      return m;
    }
    const double r2 = r * r;
    const double s = r2 * t;
    const double g2 = core_.g2(s);
    m.u_u0 = core_.kappa(0, 0, s) - s * s * g2;  // K0 - r^4 K2
    m.u_u1 = t * core_.g1(s);                    // K1
    m.u_th0 = t * s * g2;                        // r^2 K2
    m.th_u0 = r2 * core_.theta_lift_u0(s);
    m.th_u1 = core_.theta_lift(1, s);
    m.th_th0 = core_.theta_lift(2, s);
    return m;
  }

  /// (uhat, thetahat) at (t, r) for Fourier data (u0hat, u1hat, th0hat).
  std::pair<complexd, complexd> solution_hat(double t, double r,
                                             const std::array<complexd, 3>& data) const {
    const auto m = multipliers(t, r);
    return {m.u_u0 * data[0] + m.u_u1 * data[1] + m.u_th0 * data[2],
            m.th_u0 * data[0] + m.th_u1 * data[1] + m.th_th0 * data[2]};
  }

 private:
  static complexd limit_at_r0(int j, int order, double t) {
    // series in r^2: only the k = j Taylor term survives at r = 0
    if (order > j) return 0.0;
    double v = 1.0;
    for (int p = 0; p < j - order; ++p) v *= t / static_cast<double>(p + 1);
    return v;
  }

  PlateKernelCore core_;
  KernelMode mode_;
};

}  // namespace teplab
