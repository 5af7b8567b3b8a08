#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "teplab/presets.hpp"
#include "teplab/profiles.hpp"

using namespace teplab;

namespace {

// test-local RK4 for the damped-plate oscillator u'' + r^2 u' + r^4 u = f(t),
// independent of the closed forms it checks
template <class F>
std::pair<double, double> rk4_oscillator(double r, double t_end, double u0, double v0, F&& f,
                                         int steps) {
  const double r2 = r * r, r4 = r2 * r2;
  double u = u0, v = v0;
  const double h = t_end / steps;
  auto acc = [&](double tt, double uu, double vv) { return f(tt) - r4 * uu - r2 * vv; };
  double t = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double k1u = v, k1v = acc(t, u, v);
    const double k2u = v + 0.5 * h * k1v, k2v = acc(t + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    const double k3u = v + 0.5 * h * k2v, k3v = acc(t + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    const double k4u = v + h * k3v, k4v = acc(t + h, u + h * k3u, v + h * k3v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    t += h;
  }
  return {u, v};
}

}  // namespace

TEST_CASE("J profiles") {
  const CharRoots& cr = plate_roots();
  const double D = cr.denom();

  SUBCASE("J1 at r = 0 is t / D") {
    for (const double t : {0.5, 3.0, 100.0})
      CHECK(eval_J(1, t, 0.0) == doctest::Approx(t / D).epsilon(1e-13));
  }

  SUBCASE("J0 matches the direct expression away from the origin") {
    for (const double t : {0.7, 5.0})
      for (const double r : {0.3, 1.0, 2.0}) {
        const double s = r * r * t;
        const double direct =
            (std::exp(-cr.a0 * s) - std::cos(cr.a2 * s) * std::exp(-cr.a1 * s)) / (r * r * D);
        CHECK(eval_J(0, t, r) == doctest::Approx(direct).epsilon(1e-11));
      }
  }

  SUBCASE("J0 limit at r = 0") {
    const double t = 4.0;
    CHECK(eval_J(0, t, 0.0) == doctest::Approx(-t * cr.delta() / D).epsilon(1e-13));
  }

  SUBCASE("J2, J3 equal the finite-difference lift of J0, J1") {
    const double t = 2.3, r = 0.6, h = 1e-4;
    for (int j = 0; j < 2; ++j) {
      const double d2 =
          (eval_J(j, t + h, r) - 2.0 * eval_J(j, t, r) + eval_J(j, t - h, r)) / (h * h);
      const double want = d2 / (r * r) + r * r * eval_J(j, t, r);
      CHECK(eval_J(2 + j, t, r) == doctest::Approx(want).epsilon(1e-5));
    }
  }

  SUBCASE("negative t and bad index rejected") {
    CHECK_THROWS_AS(eval_J(0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_J(4, 1.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("J2, J3 are combinations of the three decay modes") {
  // least-squares fit onto span{exp(-a0 s), cos(a2 s) exp(-a1 s), sin(a2 s) exp(-a1 s)}
  const CharRoots& cr = plate_roots();
  const double r = 0.8;
  const int m = 40;
  for (int j : {2, 3}) {
    Eigen::MatrixXd A(m, 3);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
      const double t = 0.1 + 6.0 * i / (m - 1);
      const double s = r * r * t;
      A(i, 0) = std::exp(-cr.a0 * s);
      A(i, 1) = std::cos(cr.a2 * s) * std::exp(-cr.a1 * s);
      A(i, 2) = std::sin(cr.a2 * s) * std::exp(-cr.a1 * s);
      b(i) = eval_J(j, t, r);
    }
    const Eigen::Vector3d x = A.colPivHouseholderQr().solve(b);
    CHECK((A * x - b).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("combined data") {
  const auto u1 = radial_preset("gaussian");
  const auto th0 = radial_preset("mean-zero-gaussian-derivative");
  const auto psi = combine_data(u1, th0);
  const auto c = combined_coefficients();
  for (const double r : {0.0, 0.4, 1.7}) {
    const complexd want0 = c.c_u1_0 * u1.profile(r) + c.c_th0_0 * th0.profile(r);
    const complexd want1 = c.c_u1_1 * u1.profile(r) + c.c_th0_1 * th0.profile(r);
    CHECK(std::abs(psi.psi0.profile(r) - want0) < 1e-15);
    CHECK(std::abs(psi.psi1.profile(r) - want1) < 1e-15);
  }
  CHECK(psi.psi0.mean == doctest::Approx(c.c_u1_0).epsilon(1e-15));
  CHECK(psi.psi1.mean == doctest::Approx(c.c_u1_1).epsilon(1e-15));
}

TEST_CASE("structurally damped plate closed form") {
  SUBCASE("initial data") {
    const auto [u, ut] = eval_u0_hat(0.0, 1.4, complexd{0.3, -0.2}, complexd{1.1, 0.5});
    CHECK(std::abs(u - complexd{0.3, -0.2}) < 1e-15);
    CHECK(std::abs(ut - complexd{1.1, 0.5}) < 1e-15);
  }

  SUBCASE("displacement slot formula") {
    const double t = 2.0, r = 0.9, s = r * r * t;
    const double w = 0.5 * std::sqrt(3.0) * s;
    const double want = (std::sin(w) / std::sqrt(3.0) + std::cos(w)) * std::exp(-0.5 * s);
    const auto [u, ut] = eval_u0_hat(t, r, 1.0, 0.0);
    CHECK(u == doctest::Approx(want).epsilon(1e-13));
    (void)ut;
  }

  SUBCASE("r = 0 limit is u0 + t u1") {
    const auto [u, ut] = eval_u0_hat(5.0, 0.0, 2.0, 3.0);
    CHECK(u == doctest::Approx(17.0));
    CHECK(ut == doctest::Approx(3.0));
  }

  SUBCASE("velocity slot against a test-local RK4") {
    for (const double r : {0.4, 1.0, 1.9}) {
      const double t = 3.0;
      const auto [u_rk, v_rk] = rk4_oscillator(r, t, 0.0, 1.0, [](double) { return 0.0; }, 40000);
      const auto [u, ut] = eval_u0_hat(t, r, 0.0, 1.0);
      CHECK(std::abs(u - u_rk) <= 1e-8 * std::max(1.0, std::abs(u_rk)));
      CHECK(std::abs(ut - v_rk) <= 1e-8 * std::max(1.0, std::abs(v_rk)));
    }
  }

  SUBCASE("oscillator residual via the analytic second derivative") {
    for (const double r : {0.2, 1.0, 3.0})
      for (const double t : {0.1, 1.0, 10.0}) {
        const double r2 = r * r;
        const auto [u, ut] = eval_u0_hat(t, r, 0.7, -0.4);
        const double utt = eval_u0_hat_tt(t, r, 0.7, -0.4);
        const double scale = std::max({std::abs(u), std::abs(ut), 1.0});
        CHECK(std::abs(utt + r2 * r2 * u + r2 * ut) <= 1e-10 * scale);
      }
  }
}

TEST_CASE("Duhamel corrector") {
  SUBCASE("vanishing initial data and r = 0") {
    CHECK(std::abs(eval_uI1_hat(0.0, 1.0, 1.0, 2.0).value) == 0.0);
    CHECK(std::abs(eval_uI1_hat(3.0, 0.0, 1.0, 2.0).value) == 0.0);
  }

  SUBCASE("against the forced-oscillator RK4 oracle") {
    // u^{I,1}'' + r^2 u^{I,1}' + r^4 u^{I,1} = -r^4 u^0 - r^2 u^0_t
    for (const double r : {0.4, 1.0}) {
      for (const double t : {1.0, 4.0}) {
        auto forcing = [&](double tau) {
          const auto [u0, u0t] = eval_u0_hat(tau, r, 1.0, 0.0);
          return -r * r * (r * r * u0 + u0t);
        };
        const auto [ui_rk, uit_rk] = rk4_oscillator(r, t, 0.0, 0.0, forcing, 60000);
        const auto got = eval_uI1_hat(t, r, 1.0, 0.0);
        CHECK(got.converged);
        const double scale = std::max(std::abs(ui_rk), 1e-6);
        CHECK(std::abs(got.value.real() - ui_rk) <= 1e-7 * scale);
        CHECK(std::abs(got.value_t.real() - uit_rk) <= 1e-7 * std::max(std::abs(uit_rk), 1e-6));
      }
    }
  }

  SUBCASE("growth bound with a fitted constant") {
    // |u^{I,1}| <= C t exp(-r^2 t/2) (r^2 |u0| + |u1|)
    double max_ratio = 0.0;
    for (const double r : {0.2, 0.6, 1.2})
      for (const double t : {0.5, 2.0, 8.0, 20.0}) {
        const double bound = t * std::exp(-0.5 * r * r * t) * (r * r * 1.0 + 1.0);
        const auto got = eval_uI1_hat(t, r, 1.0, 1.0);
        max_ratio = std::max(max_ratio, std::abs(got.value) / bound);
      }
    CHECK(max_ratio < 4.0);
  }

  SUBCASE("linearity in the data slots") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
      const complexd a0{unif(rng), unif(rng)}, a1{unif(rng), unif(rng)};
      const complexd b0{unif(rng), unif(rng)}, b1{unif(rng), unif(rng)};
      const double al = unif(rng), be = unif(rng);
      const double t = 1.5, r = 0.8;
      const auto va = eval_uI1_hat(t, r, a0, a1).value;
      const auto vb = eval_uI1_hat(t, r, b0, b1).value;
      const auto vc = eval_uI1_hat(t, r, al * a0 + be * b0, al * a1 + be * b1).value;
      CHECK(std::abs(vc - (al * va + be * vb)) < 1e-10 * std::max(1.0, std::abs(vc)));
    }
  }
}
