#include <doctest.h>

#include <cmath>

#include "teplab/kernels.hpp"
#include "teplab/oracle.hpp"
#include "teplab/profiles.hpp"

using namespace teplab;

TEST_CASE("r = 0 decouples to the exact linear solution") {
  FrequencyODE ode{0.0, 1.0, State3(complexd{1.0, 0.5}, complexd{-0.3, 0.2}, complexd{2.0, 0.0})};
  const double t = 7.0;
  const State3 y = integrate(ode, t);
  CHECK(std::abs(y[0] - (ode.state[0] + t * ode.state[1])) < 1e-12);
  CHECK(std::abs(y[1] - ode.state[1]) < 1e-12);
  CHECK(std::abs(y[2] - ode.state[2]) < 1e-12);
}

TEST_CASE("coupled oracle vs closed form at eps = 1") {
  const KernelSet ks;
  FrequencyODE ode{1.0, 1.0, State3(1.0, 0.0, 0.0)};
  const State3 y = integrate(ode, 5.0);
  const auto [u, th] = ks.solution_hat(5.0, 1.0, {1.0, 0.0, 0.0});
  CHECK(std::abs(u - y[0]) <= 1e-8);
  CHECK(std::abs(th - y[2]) <= 1e-8);
}

TEST_CASE("small-eps trajectory approaches the structurally damped plate") {
  // |u^eps - u^0| scales like eps (two independent paths)
  const double r = 1.0, t = 1.0;
  auto diff = [&](double eps) {
    FrequencyODE ode{r, eps, State3(0.0, 1.0, -1.0)};
    const State3 y = integrate(ode, t);
    const auto [u0, u0t] = eval_u0_hat(t, r, complexd{0.0, 0.0}, complexd{1.0, 0.0});
    (void)u0t;
    return std::abs(y[0] - u0);
  };
  const double d3 = diff(1e-3);
  const double d4 = diff(1e-4);
  CHECK(d3 < 5e-3);              // within C*eps for an O(1) constant
  CHECK(d3 / d4 > 7.0);          // linear scaling in eps
  CHECK(d3 / d4 < 13.0);
}

TEST_CASE("third-order path") {
  SUBCASE("initial data reproduced") {
    const State3 data(complexd{0.3, 0.0}, complexd{-1.0, 0.4}, complexd{0.1, 0.1});
    const State3 y = integrate_third_order(0.7, 0.0, data);
    CHECK((y - data).norm() == 0.0);
  }
  SUBCASE("matches K1 for velocity data") {
    const KernelSet ks;
    const State3 y = integrate_third_order(1.0, 3.0, State3(0.0, 1.0, 0.0));
    CHECK(std::abs(y[0] - ks.kernel(1, 3.0, 1.0)) <= 1e-8);
  }
  SUBCASE("reduction: coupled at eps = 1 equals the cubic with the induced datum") {
    for (const double r : {0.3, 1.0, 2.4}) {
      for (const double t : {1.0, 6.0}) {
        const complexd u0{0.8, -0.1}, u1{-0.5, 0.3}, th0{0.2, 0.6};
        FrequencyODE ode{r, 1.0, State3(u0, u1, th0)};
        const State3 yc = integrate(ode, t);
        const double r2 = r * r;
        const complexd utt0 = -r2 * r2 * u0 + r2 * th0;
        const State3 y3 = integrate_third_order(r, t, State3(u0, u1, utt0));
        CHECK(std::abs(yc[0] - y3[0]) <= 1e-8 * std::max(1.0, std::abs(yc[0])));
      }
    }
  }
}

TEST_CASE("fourth-order convergence of the base step") {
  // halving dt cuts the one-step error ~16x on a smooth segment
  const double r = 1.0;
  const double r2 = r * r, r4 = r2 * r2;
  auto rhs = [&](double, const State3& y) {
    return State3(y[1], -r4 * y[0] + r2 * y[2], -r2 * (y[2] + y[1]));
  };
  const State3 y0(1.0, 0.2, -0.4);
  IntegrateOptions tight;
  tight.dt_max = 1e-4;
  tight.step_tol = 1e-14;
  const State3 ref = integrate_rk4(y0, rhs, 0.5, tight);
  auto fixed_steps = [&](int n) {
    State3 y = y0;
    const double h = 0.5 / n;
    for (int i = 0; i < n; ++i) y = detail::rk4_step(rhs, i * h, y, h);
    return (y - ref).norm();
  };
  const double e1 = fixed_steps(8);
  const double e2 = fixed_steps(16);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("stiffness guard reports (r, eps)") {
  FrequencyODE ode{1e6, 1e-6, State3(1.0, 0.0, 0.0)};
  CHECK_THROWS_AS(integrate(ode, 1.0), StiffnessError);
  CHECK_THROWS_AS(integrate(FrequencyODE{1.0, -0.5, State3::Zero()}, 1.0), std::invalid_argument);
}

TEST_CASE("thermo1d oracle runs and conserves nothing but sanity") {
  const State3 y = integrate_thermo1d(1.0, 1.0, 1.0, 1.0, 1.0, 2.0, State3(1.0, 0.0, 0.0));
  CHECK(std::isfinite(y.norm()));
  CHECK(y.norm() < 10.0);  // dissipative system
}
