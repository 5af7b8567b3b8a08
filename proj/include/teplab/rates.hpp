#pragma once

// Power-law fitting of norm sweeps and the dimension classification of the
// large-time L2 behavior.

#include <string>
#include <utility>
#include <vector>

#include "teplab/kernels.hpp"
#include "teplab/quadrature.hpp"
#include "teplab/singular_limit.hpp"

namespace teplab {

struct RateFit {
  double exponent = 0.0;
  double intercept = 0.0;      // log-space intercept: log(norm) ~ intercept + exponent*log(t)
  double max_residual = 0.0;   // worst |log norm - fit|
  double t_min = 0.0, t_max = 0.0;
};

/// Least-squares slope of log(norm) against log(t).
/// Requires >= 4 samples, strictly increasing t, positive norms.
RateFit fit_rate(const std::vector<std::pair<double, double>>& samples);

/// Dyadic sweep grid 2^k, k = 10..24 (rates are asserted for t >> 1).
std::vector<double> dyadic_t_grid(int k_min = 10, int k_max = 24);

enum class NormOf { displacement, temperature };

/// ||chi_int uhat(t)|| (or thetahat) for the given data triple; stabilized
/// multipliers, inner zone.
std::vector<std::pair<double, double>> solution_norm_samples(int n, const DataTriple& data,
                                                             const std::vector<double>& t_grid,
                                                             NormOf which,
                                                             double rel_tol = 1e-8);

/// ||chi_int (uhat - Jhat0 P_Psi0 - Jhat1 P_Psi1)|| samples.
std::vector<std::pair<double, double>> profile_error_samples(int n, const DataTriple& data,
                                                             const std::vector<double>& t_grid,
                                                             double rel_tol = 1e-8);

/// Fitted exponent of the profile-error sweep (Corollary-style refinement).
RateFit profile_error_rate(int n, const DataTriple& data, double rel_tol = 1e-8);

struct Classification {
  int n = 0;
  std::string regime;           // "growth" | "bounded" | "decay"
  double fitted_exponent = 0.0;
  double theory_exponent = 0.0; // 1 - n/4
  double max_residual = 0.0;
  bool mismatch = false;        // |fitted - theory| > 0.05
};

/// Measured classification of ||u(t)|| for the constant-profile u1 datum.
Classification classify(int n);

}  // namespace teplab
