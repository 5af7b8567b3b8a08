#include "teplab/rates.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "teplab/presets.hpp"
#include "teplab/profiles.hpp"

namespace teplab {

RateFit fit_rate(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 4) throw std::invalid_argument("fit_rate: need at least 4 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].second > 0.0)) throw std::invalid_argument("fit_rate: nonpositive norm");
    if (i > 0 && !(samples[i].first > samples[i - 1].first))
      throw std::invalid_argument("fit_rate: abscissa must be strictly increasing");
  }
  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    A(i, 0) = std::log(samples[i].first);
    A(i, 1) = 1.0;
    b(i) = std::log(samples[i].second);
  }
  const Eigen::Vector2d x = A.colPivHouseholderQr().solve(b);
  RateFit fit;
  fit.exponent = x(0);
  fit.intercept = x(1);
  fit.max_residual = (A * x - b).cwiseAbs().maxCoeff();
  fit.t_min = samples.front().first;
  fit.t_max = samples.back().first;
  return fit;
}

std::vector<double> dyadic_t_grid(int k_min, int k_max) {
  std::vector<double> g;
  for (int k = k_min; k <= k_max; ++k) g.push_back(std::ldexp(1.0, k));
  return g;
}

namespace {

/// uhat(t, r) for the data triple through the stabilized multipliers.
complexd uhat_value(const KernelSet& ks, double t, double r, const DataTriple& d) {
  const auto m = ks.multipliers(t, r);
  return m.u_u0 * d.u0.profile(r) + m.u_u1 * d.u1.profile(r) + m.u_th0 * d.th0.profile(r);
}

complexd thetahat_value(const KernelSet& ks, double t, double r, const DataTriple& d) {
  const auto m = ks.multipliers(t, r);
  return m.th_u0 * d.u0.profile(r) + m.th_u1 * d.u1.profile(r) + m.th_th0 * d.th0.profile(r);
}

NormTask unit_task(int n, std::function<complexd(double, double)> mult) {
  NormTask task;
  task.n = n;
  task.multiplier = std::move(mult);
  task.data = radial_preset("constant-profile");
  task.r_max = kInnerZoneRadius;
  task.zone = Zone::inner;
  return task;
}

}  // namespace

std::vector<std::pair<double, double>> solution_norm_samples(int n, const DataTriple& data,
                                                             const std::vector<double>& t_grid,
                                                             NormOf which, double rel_tol) {
  const KernelSet ks;
  auto mult = [&ks, data, which](double t, double r) {
    return which == NormOf::displacement ? uhat_value(ks, t, r, data)
                                         : thetahat_value(ks, t, r, data);
  };
  const NormTask task = unit_task(n, mult);
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back({t, l2_norm(task, t, rel_tol).value});
  return out;
}

std::vector<std::pair<double, double>> profile_error_samples(int n, const DataTriple& data,
                                                             const std::vector<double>& t_grid,
                                                             double rel_tol) {
  const KernelSet ks;
  const auto cc = combined_coefficients(ks.roots());
  const double P0 = cc.c_u1_0 * data.u1.mean + cc.c_th0_0 * data.th0.mean;
  const double P1 = cc.c_u1_1 * data.u1.mean + cc.c_th0_1 * data.th0.mean;
  auto mult = [&ks, data, P0, P1](double t, double r) {
    return uhat_value(ks, t, r, data) - eval_J(0, t, r) * P0 - eval_J(1, t, r) * P1;
  };
  const NormTask task = unit_task(n, mult);
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back({t, l2_norm(task, t, rel_tol).value});
  return out;
}

RateFit profile_error_rate(int n, const DataTriple& data, double rel_tol) {
  if (!std::isfinite(data.u1.lip) || !std::isfinite(data.th0.lip))
    throw std::invalid_argument("profile_error_rate: data need finite Lipschitz bounds");
  return fit_rate(profile_error_samples(n, data, dyadic_t_grid(), rel_tol));
}

Classification classify(int n) {
  if (n < 1) throw std::invalid_argument("classify: n must be >= 1");
  // lower-bound witness datum: u1 with unit mean and flat profile
  DataTriple data{radial_preset("constant-profile"), radial_preset("constant-profile"),
                  radial_preset("constant-profile")};
  data.u0 = RadialData{[](double) { return complexd{0.0, 0.0}; }, 0.0, 0.0};
  data.th0 = data.u0;
  const auto fit = fit_rate(solution_norm_samples(n, data, dyadic_t_grid(), NormOf::displacement));
  Classification c;
  c.n = n;
  c.fitted_exponent = fit.exponent;
  c.theory_exponent = 1.0 - 0.25 * n;
  c.max_residual = fit.max_residual;
  c.mismatch = std::abs(fit.exponent - c.theory_exponent) > 0.05;
  if (std::abs(fit.exponent) <= 0.05)
    c.regime = "bounded";
  else
    c.regime = fit.exponent > 0.0 ? "growth" : "decay";
  return c;
}

}  // namespace teplab
