#include <doctest.h>

#include <cmath>
#include <numbers>

#include "teplab/presets.hpp"
#include "teplab/profiles.hpp"
#include "teplab/quadrature.hpp"

using namespace teplab;

namespace {

constexpr double kPi = std::numbers::pi;

// crude independent oracle: composite Simpson with refinement to convergence
template <class F>
double simpson(F&& f, double a, double b, int n = 1 << 16) {
  double acc = f(a) + f(b);
  const double h = (b - a) / n;
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

NormTask task_of(int n, std::function<complexd(double, double)> m, RadialData d, double rmax,
                 Zone z) {
  NormTask t;
  t.n = n;
  t.multiplier = std::move(m);
  t.data = std::move(d);
  t.r_max = rmax;
  t.zone = z;
  return t;
}

}  // namespace

TEST_CASE("sphere areas against ball volumes") {
  CHECK(unit_sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));          // vol B1 = 2
  CHECK(unit_sphere_area(2) / 2.0 == doctest::Approx(kPi).epsilon(1e-14));    // vol B2 = pi
  CHECK(unit_sphere_area(3) / 3.0 == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(unit_sphere_area(0), std::invalid_argument);
}

TEST_CASE("indicator norms in closed form") {
  auto one = [](double, double) { return complexd{1.0, 0.0}; };
  const auto task2 = task_of(2, one, radial_preset("indicator"), 1.0, Zone::full);
  // n = 2: sqrt(2 pi * 1/2) = sqrt(pi), on both integration paths
  CHECK(l2_norm(task2, 3.7).value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-8));
  CHECK(l2_norm(task2, 0.0).value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-8));

  // n = 3 with the Plancherel factor
  const auto task3 = task_of(3, one, radial_preset("indicator"), 1.0, Zone::full);
  const double want3 = std::pow(2.0 * kPi, -1.5) * std::sqrt(4.0 * kPi / 3.0);
  CHECK(plancherel_l2(task3, 1.0).value == doctest::Approx(want3).epsilon(1e-8));
}

TEST_CASE("gaussian moment integral, n = 4") {
  // m = exp(-r^2 t), fhat = 1: omega_3 * Gamma(2)/(2 (2t)^2) = pi^2/(4 t^2),
  // norm = pi / (2 t); cross-checked with a Simpson oracle
  auto m = [](double t, double r) { return complexd{std::exp(-r * r * t), 0.0}; };
  const double t = 1.3;
  const auto task = task_of(4, m, radial_preset("constant-profile"), 30.0, Zone::full);
  const double got = l2_norm(task, t).value;
  CHECK(got == doctest::Approx(kPi / (2.0 * t)).epsilon(1e-8));
  const double oracle = std::sqrt(
      unit_sphere_area(4) * simpson([&](double r) { return std::exp(-2.0 * r * r * t) * r * r * r; },
                                    0.0, 30.0));
  CHECK(got == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("unit-norm gaussian through Plancherel, n = 1") {
  // f(x) = pi^(-1/4) exp(-x^2/2) has unit L2 norm; fhat = sqrt2 pi^(1/4) exp(-r^2/2)
  const double amp = std::sqrt(2.0) * std::pow(kPi, 0.25);
  RadialData d{[amp](double r) { return complexd{amp * std::exp(-0.5 * r * r), 0.0}; }, amp, amp};
  auto one = [](double, double) { return complexd{1.0, 0.0}; };
  const auto task = task_of(1, one, d, 40.0, Zone::full);
  CHECK(plancherel_l2(task, 1.0).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("J1 norm scaling between t = 1e4 and t = 1e6, n = 1") {
  auto j1 = [](double t, double r) { return complexd{eval_J(1, t, r), 0.0}; };
  const auto task = task_of(1, j1, radial_preset("constant-profile"), kInnerZoneRadius, Zone::inner);
  const double n1 = l2_norm(task, 1e4).value;
  const double n2 = l2_norm(task, 1e6).value;
  const double log_ratio = std::log(n2 / n1);
  const double want = (1.0 - 1.0 / 4.0) * std::log(100.0);
  CHECK(std::abs(log_ratio - want) < 0.02 * std::abs(want));
}

TEST_CASE("profile norm exponent scaling across dimensions") {
  // || chi_int (J0 P0 + J1 P1) || at t vs 4t: log_4 ratio within 0.02 of 1 - n/4
  const double P0 = 1.0, P1 = 0.5;
  auto prof = [&](double t, double r) {
    return complexd{eval_J(0, t, r) * P0 + eval_J(1, t, r) * P1, 0.0};
  };
  for (int n = 1; n <= 6; ++n) {
    const auto task = task_of(n, prof, radial_preset("constant-profile"), kInnerZoneRadius,
                              Zone::inner);
    const double t = 1e4;
    const double ratio = std::log(l2_norm(task, 4.0 * t).value / l2_norm(task, t).value) /
                         std::log(4.0);
    CHECK(std::abs(ratio - (1.0 - 0.25 * n)) < 0.02);
  }
}

TEST_CASE("refinement stability") {
  auto m = [](double t, double r) { return complexd{eval_J(1, t, r), 0.0}; };
  const auto task = task_of(3, m, radial_preset("gaussian"), kInnerZoneRadius, Zone::inner);
  const auto coarse = l2_norm(task, 123.0, 1e-8);
  const auto fine = l2_norm(task, 123.0, 5e-9);
  CHECK(coarse.converged);
  CHECK(std::abs(fine.value - coarse.value) <=
        std::max(coarse.achieved_tol, 1e-12) * std::abs(coarse.value) + 1e-300);
}

TEST_CASE("radial data invariants") {
  SUBCASE("gaussian satisfies its Lipschitz bound") {
    CHECK(lipschitz_slack(radial_preset("gaussian"), 10.0) >= 0.0);
    CHECK(lipschitz_slack(radial_preset("mean-zero-gaussian-derivative"), 10.0) >= 0.0);
    CHECK(lipschitz_slack(radial_preset("constant-profile"), 10.0) >= 0.0);
  }
  SUBCASE("an understated bound is flagged") {
    RadialData bad = radial_preset("gaussian");
    bad.lip = 0.5;  // true bound is ~0.638
    CHECK(lipschitz_slack(bad, 10.0) < 0.0);
  }
  SUBCASE("task validation") {
    auto one = [](double, double) { return complexd{1.0, 0.0}; };
    CHECK_THROWS_AS(l2_norm(task_of(0, one, radial_preset("gaussian"), 1.0, Zone::full), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(l2_norm(task_of(2, one, radial_preset("gaussian"), -1.0, Zone::full), 1.0),
                    std::invalid_argument);
  }
}
