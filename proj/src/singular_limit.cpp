#include "teplab/singular_limit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include "teplab/oracle.hpp"
#include "teplab/parallel.hpp"
#include "teplab/profiles.hpp"
#include "teplab/rates.hpp"

namespace teplab {

std::vector<double> default_t_grid() {
  std::vector<double> g(61);
  for (int i = 0; i < 61; ++i) g[i] = std::pow(10.0, -2.0 + 5.0 * i / 60.0);
  return g;
}

namespace {

// Simultaneous G7/K15 panel for a 3-component integrand (one oracle solve per
// node feeds all three norms).
using Comp3 = std::array<double, 3>;

template <class F>
void panel3(F&& f, double a, double b, Comp3& value, Comp3& err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  Comp3 resk{}, resg{};
  const Comp3 fc = f(c);
  for (int k = 0; k < 3; ++k) {
    resk[k] = gk::kWgk[7] * fc[k];
    resg[k] = gk::kWg[3] * fc[k];
  }
  for (int i = 0; i < 7; ++i) {
    const double x = h * gk::kXgk[i];
    const Comp3 lo = f(c - x);
    const Comp3 hi = f(c + x);
    for (int k = 0; k < 3; ++k) {
      const double fsum = lo[k] + hi[k];
      resk[k] += gk::kWgk[i] * fsum;
      if (i % 2 == 1) resg[k] += gk::kWg[i / 2] * fsum;
    }
  }
  for (int k = 0; k < 3; ++k) {
    value[k] = resk[k] * h;
    err[k] = std::abs((resk[k] - resg[k]) * h);
  }
}

template <class F>
std::array<double, 3> integrate3(F&& f, const std::vector<double>& bp, double rel_tol,
                                 std::size_t max_panels = 400) {
  struct Piece {
    double a, b;
    Comp3 value, err;
    double score;
    bool operator<(const Piece& o) const { return score < o.score; }
  };
  std::priority_queue<Piece> q;
  Comp3 total{}, err{};
  std::size_t n_panels = 0;
  auto push = [&](double a, double b) {
    Piece p{a, b, {}, {}, 0.0};
    panel3(f, a, b, p.value, p.err);
    p.score = p.err[0] + p.err[1] + p.err[2];
    for (int k = 0; k < 3; ++k) {
      total[k] += p.value[k];
      err[k] += p.err[k];
    }
    q.push(p);
    ++n_panels;
  };
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) push(bp[i], bp[i + 1]);

  auto done = [&] {
    for (int k = 0; k < 3; ++k)
      if (err[k] > rel_tol * std::max(std::abs(total[k]), 1e-300)) return false;
    return true;
  };
  while (!done() && n_panels < max_panels) {
    Piece top = q.top();
    q.pop();
    const double mid = 0.5 * (top.a + top.b);
    if (mid <= top.a || mid >= top.b) continue;
    for (int k = 0; k < 3; ++k) {
      total[k] -= top.value[k];
      err[k] -= top.err[k];
    }
    n_panels -= 1;
    push(top.a, mid);
    push(mid, top.b);
  }
  return total;
}

struct TNorms {
  double v_norm;    // ||U_t||
  double r2u_norm;  // ||r^2 U||
  double u_norm;    // ||U||
};

TNorms error_norms_at(double t, double epsilon, int n, const DataTriple& data, int order,
                      double rel_tol) {
  const double st = std::sqrt(t);
  const double W = kInnerZoneRadius * st;
  auto f = [&](double w) -> Comp3 {
    const double r = w / st;
    const complexd d0 = data.u0.profile(r);
    const complexd d1 = data.u1.profile(r);
    const complexd d2 = data.th0.profile(r);
    FrequencyODE ode{r, epsilon, State3(d0, d1, d2)};
    const State3 y = integrate(ode, t);
    const auto [u0c, u0t] = eval_u0_hat(t, r, d0, d1);
    complexd U = y[0] - u0c;
    complexd V = y[1] - u0t;
    if (order == 2) {
      const DuhamelResult cor = eval_uI1_hat(t, r, d0, d1);
      U -= epsilon * cor.value;
      V -= epsilon * cor.value_t;
    }
    const double wpow = std::pow(w, n - 1);
    const double r2 = r * r;
    return {std::norm(V) * wpow, r2 * r2 * std::norm(U) * wpow, std::norm(U) * wpow};
  };
  const auto I = integrate3(f, detail::oscillation_breakpoints(W), rel_tol);
  const double c = unit_sphere_area(n) * std::pow(t, -0.5 * n);
  return {std::sqrt(std::max(c * I[0], 0.0)), std::sqrt(std::max(c * I[1], 0.0)),
          std::sqrt(std::max(c * I[2], 0.0))};
}

SupErrors sup_errors(double epsilon, int n, const DataTriple& data,
                     std::span<const double> t_grid, ErrorBranch branch, int order,
                     double rel_tol, int threads) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("error sweep: epsilon must lie in (0,1)");
  if (n < 1) throw std::invalid_argument("error sweep: dimension must be >= 1");
  const bool want_l2 = branch != ErrorBranch::energy;
  if (want_l2) {
    if (n < 3)
      throw std::invalid_argument("L2 error branch requires n >= 3");
    if (std::abs(data.u1.mean) > 0.0 || !std::isfinite(data.u1.lip))
      throw std::invalid_argument("L2 error branch requires mean-zero u1 with finite lip");
  }
  if (t_grid.empty()) throw std::invalid_argument("error sweep: empty t grid");

  std::vector<TNorms> per_t(t_grid.size());
  parallel_for(t_grid.size(), threads, [&](std::size_t i) {
    per_t[i] = error_norms_at(t_grid[i], epsilon, n, data, order, rel_tol);
  });

  SupErrors out;
  out.energy = 0.0;
  out.l2 = want_l2 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  for (const auto& tn : per_t) {
    out.energy = std::max(out.energy, tn.v_norm + tn.r2u_norm);
    if (want_l2) out.l2 = std::max(out.l2, tn.u_norm);
  }
  return out;
}

}  // namespace

SupErrors first_order_error(double epsilon, int n, const DataTriple& data,
                            std::span<const double> t_grid, ErrorBranch branch,
                            double quad_rel_tol, int threads) {
  return sup_errors(epsilon, n, data, t_grid, branch, 1, quad_rel_tol, threads);
}

SupErrors second_order_error(double epsilon, int n, const DataTriple& data,
                             std::span<const double> t_grid, ErrorBranch branch,
                             double quad_rel_tol, int threads) {
  // Theorem hypothesis: theta0 == -u1, checked on a sample grid.
  for (int i = 0; i <= 64; ++i) {
    const double r = kOuterZoneRadius * i / 64.0;
    const complexd want = -data.u1.profile(r);
    if (std::abs(data.th0.profile(r) - want) > 1e-12 * std::max(1.0, std::abs(want)))
      throw std::invalid_argument("second_order_error: theta0 must equal -u1");
  }
  return sup_errors(epsilon, n, data, t_grid, branch, 2, quad_rel_tol, threads);
}

EpsilonSweep epsilon_sweep(int order, int n, std::span<const double> eps_grid,
                           const DataTriple& data, std::span<const double> t_grid,
                           ErrorBranch branch, double quad_rel_tol, int threads) {
  if (order != 1 && order != 2) throw std::invalid_argument("epsilon_sweep: order must be 1 or 2");
  EpsilonSweep sweep;
  sweep.order = order;
  sweep.n = n;
  for (double eps : eps_grid) {
    const SupErrors e = order == 1
        ? first_order_error(eps, n, data, t_grid, branch, quad_rel_tol, threads)
        : second_order_error(eps, n, data, t_grid, branch, quad_rel_tol, threads);
    sweep.rows.push_back({eps, e.energy, e.l2});
  }
  // fit slopes on (eps, sup) in log-log; fit_rate expects increasing abscissa
  auto fit = [&](auto get) {
    std::vector<std::pair<double, double>> samples;
    for (auto it = sweep.rows.rbegin(); it != sweep.rows.rend(); ++it) {
      const double v = get(*it);
      if (std::isfinite(v) && v > 0.0) samples.push_back({it->eps, v});
    }
    if (samples.size() < 4) return std::numeric_limits<double>::quiet_NaN();
    return fit_rate(samples).exponent;
  };
  sweep.slope_energy = fit([](const EpsilonSweepRow& r) { return r.sup_energy; });
  if (branch != ErrorBranch::energy)
    sweep.slope_l2 = fit([](const EpsilonSweepRow& r) { return r.sup_l2; });
  return sweep;
}

}  // namespace teplab
