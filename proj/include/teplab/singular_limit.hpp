#pragma once

// Vanishing-thermal-parameter experiments: the error system energy, the
// first-order error u^eps - u^0 and the second-order error
// u^eps - u^0 - eps u^{I,1}, with sup-in-time norms over a log t-grid.

#include <array>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "teplab/quadrature.hpp"

namespace teplab {

/// Per-frequency state of the error system (U, V = U_t, W = V_t).
struct EpsilonState {
  double epsilon = 0.5;
  double r = 1.0;
  complexd U, V, W;
};

/// Energy of the error system; requires eps in (0,1) so the |U|^2 weight
/// (1-eps)/(2(1+eps)) stays positive.
inline double energy(const EpsilonState& st) {
  if (!(st.epsilon > 0.0 && st.epsilon < 1.0))
    throw std::invalid_argument("energy: epsilon must lie in (0,1)");
  const double r2 = st.r * st.r;
  const double r4 = r2 * r2;
  const double eps = st.epsilon;
  const double t1 = std::norm(0.5 * r2 * st.V + eps * st.W);
  const double t2 = (eps / (1.0 + eps)) * r4 * std::norm(r2 * st.U + (1.0 + eps) * st.V);
  const double t3 = 0.25 * r4 * std::norm(st.V);
  const double t4 = (1.0 - eps) / (2.0 * (1.0 + eps)) * r4 * r4 * std::norm(st.U);
  return 0.5 * (t1 + t2 + t3 + t4);
}

/// Low-frequency heat layer theta^{L,0}: exp(-r^2 t / eps) ghat with
/// g = u1 + theta0.
inline complexd heat_layer(double t, double epsilon, double r, complexd g_hat) {
  if (t < 0.0) throw std::invalid_argument("heat_layer: negative t rejected");
  if (!(epsilon > 0.0)) throw std::invalid_argument("heat_layer: epsilon must be positive");
  return std::exp(-r * r * t / epsilon) * g_hat;
}

struct DataTriple {
  RadialData u0, u1, th0;
};

enum class ErrorBranch { energy, l2, both };

struct SupErrors {
  double energy = std::numeric_limits<double>::quiet_NaN();  // sup_t (||U_t|| + ||r^2 U||)
  double l2 = std::numeric_limits<double>::quiet_NaN();      // sup_t ||U||
};

/// Default log grid 10^-2 .. 10^3, 61 points.
std::vector<double> default_t_grid();

/// sup over the t-grid of the first-order error norms, U = u^eps - u^0.
/// The L2 branch enforces n >= 3 and mean-zero u1 (weighted-L1 surrogate).
/// Norms are taken over the inner zone r <= 0.1 (see README).
SupErrors first_order_error(double epsilon, int n, const DataTriple& data,
                            std::span<const double> t_grid, ErrorBranch branch,
                            double quad_rel_tol = 1e-8, int threads = 1);

/// Same for the second-order error U^s = u^eps - u^0 - eps u^{I,1};
/// requires theta0 == -u1 (checked on a sample grid).
SupErrors second_order_error(double epsilon, int n, const DataTriple& data,
                             std::span<const double> t_grid, ErrorBranch branch,
                             double quad_rel_tol = 1e-8, int threads = 1);

struct EpsilonSweepRow {
  double eps;
  double sup_energy;
  double sup_l2;
};

struct EpsilonSweep {
  int order = 1;
  int n = 3;
  std::vector<EpsilonSweepRow> rows;
  double slope_energy = std::numeric_limits<double>::quiet_NaN();
  double slope_l2 = std::numeric_limits<double>::quiet_NaN();
};

/// Run the full epsilon sweep and fit log-log slopes of the sup errors.
EpsilonSweep epsilon_sweep(int order, int n, std::span<const double> eps_grid,
                           const DataTriple& data, std::span<const double> t_grid,
                           ErrorBranch branch, double quad_rel_tol = 1e-8, int threads = 1);

}  // namespace teplab
