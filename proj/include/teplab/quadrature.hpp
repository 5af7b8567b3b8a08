#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature and the radial L2-norm machinery.
//
// Norms of radial multipliers m(t, r) against radial data fhat(r):
//
//   ||m fhat||_{L2}^2 = omega_{n-1} * int_0^{rmax} |m(t,r) fhat(r)|^2 r^(n-1) dr
//
// computed after the substitution w = r sqrt(t), which makes the oscillation
// sin(a2 w^2) t-independent; initial panels keep >= 8 points per period.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "teplab/roots.hpp"

namespace teplab {

namespace gk {

// QUADPACK (G7, K15) nodes and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double err;
};

template <class F>
PanelResult panel(F&& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

}  // namespace gk

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  bool converged = false;
  std::size_t panels = 0;
};

/// Adaptive bisection on an initial panelization; stops when the summed error
/// estimate meets max(abs_tol, rel_tol*|I|) or the panel budget runs out.
template <class F>
QuadResult integrate_adaptive(F&& f, std::vector<double> breakpoints, double abs_tol,
                              double rel_tol, std::size_t max_panels = 20000) {
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate_adaptive: need an interval");

  struct Piece {
    double a, b, value, err;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  std::priority_queue<Piece> q;
  double total = 0.0, err = 0.0;
  std::size_t n_panels = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    auto pr = gk::panel(f, breakpoints[i], breakpoints[i + 1]);
    q.push({breakpoints[i], breakpoints[i + 1], pr.kronrod, pr.err});
    total += pr.kronrod;
    err += pr.err;
    ++n_panels;
  }
  auto tol = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
  while (err > tol() && n_panels < max_panels) {
    Piece top = q.top();
    q.pop();
    const double mid = 0.5 * (top.a + top.b);
    if (mid <= top.a || mid >= top.b) {  // interval exhausted at double precision
      q.push({top.a, top.b, top.value, 0.0});
      err -= top.err;
      continue;
    }
    auto left = gk::panel(f, top.a, mid);
    auto right = gk::panel(f, mid, top.b);
    total += left.kronrod + right.kronrod - top.value;
    err += left.err + right.err - top.err;
    q.push({top.a, mid, left.kronrod, left.err});
    q.push({mid, top.b, right.kronrod, right.err});
    ++n_panels;
  }
  return {total, err, err <= tol(), n_panels};
}

/// Surface area of the unit (n-1)-sphere: 2 pi^(n/2) / Gamma(n/2).
inline double unit_sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Radial Fourier-side datum: profile fhat(r), its value at 0 (the mean P_f)
/// and a Lipschitz bound |fhat(r) - P_f| <= lip * r standing in for the
/// weighted-L1 norm of the physical datum.
struct RadialData {
  std::function<complexd(double)> profile;
  double mean = 0.0;
  double lip = 0.0;
};

inline RadialData scaled_data(const RadialData& d, double factor) {
  auto p = d.profile;
  return RadialData{[p, factor](double r) { return factor * p(r); }, factor * d.mean,
                    std::abs(factor) * d.lip};
}

/// Check the RadialData invariants on a sample grid (profile(0) == mean and
/// the Lipschitz bound); returns the worst slack (negative when violated).
inline double lipschitz_slack(const RadialData& d, double r_max, int samples = 200) {
  if (std::abs(d.profile(0.0) - complexd{d.mean, 0.0}) > 1e-12 * std::max(1.0, std::abs(d.mean)))
    return -1.0;
  double worst = d.lip;
  for (int i = 1; i <= samples; ++i) {
    const double r = r_max * i / samples;
    worst = std::min(worst, d.lip * r - std::abs(d.profile(r) - d.mean));
  }
  return worst;
}

enum class Zone { inner, full };

inline constexpr double kInnerZoneRadius = 0.1;  // epsilon_0
inline constexpr double kOuterZoneRadius = 10.0; // N_0

struct NormTask {
  int n = 1;
  std::function<complexd(double, double)> multiplier;  // m(t, r)
  RadialData data;
  double r_max = kOuterZoneRadius;
  Zone zone = Zone::full;
};

struct NormResult {
  double value = 0.0;
  double achieved_tol = 0.0;  // relative error estimate of the squared norm
  bool converged = true;
};

namespace detail {

/// Initial breakpoints in the w variable resolving sin(a2 w^2): panel width
/// <= 15 pi / (8 a2 w) keeps >= 8 of the 15 Kronrod points per period.
inline std::vector<double> oscillation_breakpoints(double W, double a2 = 1.3071412786820455) {
  std::vector<double> bp{0.0};
  const double c = 15.0 * std::numbers::pi / (8.0 * a2);
  double w = 0.0;
  while (w < W) {
    double h = std::min(c / std::max(w, 1.0), 0.25 * W);
    h = std::max(h, 1e-6 * W);
    w = std::min(w + h, W);
    bp.push_back(w);
    if (bp.size() > 60000) break;
  }
  bp.back() = W;
  return bp;
}

}  // namespace detail

/// L2 norm of m(t, .) applied to the radial datum over the task's zone.
/// For t > 0 the integral runs in w = r sqrt(t); t = 0 integrates in r.
inline NormResult l2_norm(const NormTask& task, double t, double rel_tol = 1e-8) {
  if (task.n < 1) throw std::invalid_argument("l2_norm: dimension must be >= 1");
  if (!(task.r_max > 0.0)) throw std::invalid_argument("l2_norm: r_max must be positive");
  double rmax = task.r_max;
  if (task.zone == Zone::inner) rmax = std::min(rmax, kInnerZoneRadius);

  const double area = unit_sphere_area(task.n);
  QuadResult q;
  if (t > 0.0) {
    const double st = std::sqrt(t);
    const double W = rmax * st;
    auto f = [&](double w) {
      const double r = w / st;
      const double a = std::abs(task.multiplier(t, r) * task.data.profile(r));
      return a * a * std::pow(w, task.n - 1);
    };
    q = integrate_adaptive(f, detail::oscillation_breakpoints(W), 0.0, rel_tol);
    q.value *= std::pow(t, -0.5 * task.n);
    q.abs_err *= std::pow(t, -0.5 * task.n);
  } else {
    auto f = [&](double r) {
      const double a = std::abs(task.multiplier(t, r) * task.data.profile(r));
      return a * a * std::pow(r, task.n - 1);
    };
    std::vector<double> bp;
    for (int i = 0; i <= 16; ++i) bp.push_back(rmax * i / 16.0);
    q = integrate_adaptive(f, bp, 0.0, rel_tol);
  }
  double abs_err = area * q.abs_err;
  if (task.zone == Zone::full && t > 0.0) {
    // exterior tail: the solution multipliers decay at least like
    // exp(-a1 r^2 t) beyond N_0, so bound the discarded [rmax, inf) piece by
    // the edge integrand over the e-folding length.
    const double a1 = plate_roots().a1;
    const double edge =
        std::norm(task.multiplier(t, rmax) * task.data.profile(rmax)) * std::pow(rmax, task.n - 1);
    const double decay = std::max(4.0 * a1 * t * rmax - (task.n - 1) / rmax, 0.5);
    abs_err += area * edge / decay;
  }
  const double sq = std::max(area * q.value, 0.0);
  NormResult out;
  out.value = std::sqrt(sq);
  out.achieved_tol = (sq > 0.0) ? abs_err / sq : abs_err;
  out.converged = q.converged;
  return out;
}

/// Physical-space L2 norm under fhat(xi) = int exp(-i x.xi) f(x) dx:
/// the (2 pi)^(-n/2) Plancherel factor applied to l2_norm.
inline NormResult plancherel_l2(const NormTask& task, double t, double rel_tol = 1e-8) {
  NormResult r = l2_norm(task, t, rel_tol);
  r.value *= std::pow(2.0 * std::numbers::pi, -0.5 * task.n);
  return r;
}

}  // namespace teplab
