#pragma once

// Batch experiment drivers shared by the CLI and the acceptance suite.
// Every driver is deterministic for fixed inputs and returns both structured
// results and the CSV rendering of them.

#include <string>
#include <vector>

#include "teplab/rates.hpp"
#include "teplab/singular_limit.hpp"

namespace teplab {

struct RatesReport {
  struct Row {
    int n;
    double target_exponent;
    double fitted_exponent;
    double residual;
    bool pass;
  };
  std::vector<Row> rows;
  std::string csv;  // n,target_exponent,fitted_exponent,residual,verdict
};

/// Theorem-rate sweep of ||u|| (exponent 1 - n/4) or ||theta|| (exponent -n/4)
/// with the constant-profile witness datum in the swept slot.
RatesReport run_rates_experiment(const std::vector<int>& dims, NormOf which,
                                 double rel_tol = 1e-8, double exponent_tol = 0.05);

/// Classification table across dimensions (measured thermoelastic column,
/// reference-only pure-plate and heat columns).
std::string run_table1(const std::vector<int>& dims = {1, 2, 3, 4, 5, 6});

struct ProfileErrorReport {
  struct Row {
    int n;
    double err_exponent, err_target;
    double sol_exponent, sol_target;
    double gap;  // err_exponent - sol_exponent, expected -0.5
    double residual;
    bool pass;
  };
  std::vector<Row> rows;
  std::string csv;
};

/// Profile-improvement sweep: u0 and u1 gaussian, theta0 the
/// mean-zero-gaussian-derivative (it saturates the Lipschitz bound; purely
/// gaussian radial data has fhat'(0) = 0 and decays half an order faster).
ProfileErrorReport run_profile_error_experiment(const std::vector<int>& dims,
                                                double rel_tol = 1e-8,
                                                double exponent_tol = 0.07);

struct SingularLimitReport {
  EpsilonSweep sweep;
  std::string csv;  // eps,n,sup_energy_err,sup_l2_err,fitted_slope
};

/// Epsilon sweep of the error norms. Data: u0 gaussian, u1 from `preset`,
/// theta0 = -u1 (zero initial thermal mismatch; mandatory for order 2).
SingularLimitReport run_singular_limit_experiment(int order, int n,
                                                  const std::vector<double>& eps_grid,
                                                  const std::string& preset = "mean-zero-gaussian-derivative",
                                                  double quad_rel_tol = 1e-8, int threads = 1,
                                                  const std::vector<double>& t_grid = {});

struct OracleCompareReport {
  double max_rel_err_solution = 0.0;   // closed-form solution_hat vs coupled oracle
  double max_rel_err_reduction = 0.0;  // coupled (eps=1) vs third-order oracle
  std::string csv;
};

/// Grid comparison: 50 (t, r) points, t in [0, 20], r in [0.05, 5], three
/// seeded random data triples.
OracleCompareReport run_oracle_compare(unsigned seed = 12345);

/// Kernel/profile table renderers for the CLI.
std::string kernels_csv(const std::vector<double>& ts, const std::vector<double>& rs,
                        bool lagrange_mode = false);
std::string profiles_csv(const std::vector<double>& ts, const std::vector<double>& rs);
std::string roots_csv();
std::string thermo1d_csv(double alpha, double kappa, double g1, double g2,
                         const std::vector<double>& rs, const std::vector<double>& ts,
                         const std::array<complexd, 3>& data);

}  // namespace teplab
