#include <doctest.h>

#include <cmath>
#include <random>

#include "teplab/roots.hpp"

using namespace teplab;

namespace {

// independent oracle: bisection on mu^3 + mu^2 + 2mu + 1 over [-1, 0]
double bisect_real_root() {
  auto f = [](double m) { return ((m + 1.0) * m + 2.0) * m + 1.0; };
  double lo = -1.0, hi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("plate cubic constants") {
  const CharRoots cr = solve_characteristic_cubic();

  SUBCASE("paper approximations to two decimals") {
    CHECK(std::abs(cr.a0 - 0.57) < 0.005);
    CHECK(std::abs(cr.a1 - 0.22) < 0.005);
    CHECK(std::abs(cr.a2 - 1.31) < 0.005);
  }

  SUBCASE("a0 against the bisection oracle, 12 digits") {
    const double a0_oracle = -bisect_real_root();
    CHECK(a0_oracle == doctest::Approx(0.569840290998053).epsilon(1e-12));
    CHECK(std::abs(cr.a0 - a0_oracle) < 1e-12);
  }

  SUBCASE("Vieta identities") {
    CHECK(std::abs(cr.mu_real + 2.0 * cr.mu_complex_re + 1.0) < 1e-12);
    const double mod2 = cr.a1 * cr.a1 + cr.a2 * cr.a2;
    CHECK(std::abs(cr.a0 * mod2 - 1.0) < 1e-12);
    CHECK(std::abs(2.0 * cr.a0 * cr.a1 + mod2 - 2.0) < 1e-12);
  }

  SUBCASE("radical formulas") {
    CHECK(cr.a0 == doctest::Approx((1.0 + cr.alpha_minus) / 3.0).epsilon(1e-13));
    CHECK(cr.a1 == doctest::Approx((2.0 - cr.alpha_minus) / 6.0).epsilon(1e-13));
    CHECK(cr.a2 == doctest::Approx(std::sqrt(3.0) * cr.alpha_plus / 6.0).epsilon(1e-13));
    CHECK(cr.delta() == doctest::Approx(0.5 * cr.alpha_minus).epsilon(1e-12));
  }

  SUBCASE("negativity") {
    CHECK(cr.mu_real < 0.0);
    CHECK(cr.mu_complex_re < 0.0);
    CHECK(cr.a0 > cr.a1);
  }
}

TEST_CASE("general cubic solver examples") {
  SUBCASE("plate polynomial") {
    const auto roots = characteristic_roots_general(1.0, 2.0, 1.0);
    const CharRoots cr = solve_characteristic_cubic();
    double best = 1e9;
    for (const auto& z : roots)
      if (z.imag() == 0.0) best = std::min(best, std::abs(z.real() - cr.mu_real));
    CHECK(best < 1e-12);
  }

  SUBCASE("cube roots of 8") {
    const auto roots = characteristic_roots_general(0.0, 0.0, -8.0);
    bool real2 = false, pair = false;
    for (const auto& z : roots) {
      if (std::abs(z - complexd{2.0, 0.0}) < 1e-12) real2 = true;
      if (std::abs(z - complexd{-1.0, std::sqrt(3.0)}) < 1e-12) pair = true;
    }
    CHECK(real2);
    CHECK(pair);
  }

  SUBCASE("factored (l-1)(l-2)(l-3)") {
    const auto roots = characteristic_roots_general(-6.0, 11.0, -6.0);
    double sorted[3] = {roots[0].real(), roots[1].real(), roots[2].real()};
    std::sort(sorted, sorted + 3);
    CHECK(sorted[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sorted[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sorted[2] == doctest::Approx(3.0).epsilon(1e-12));
    for (const auto& z : roots) CHECK(z.imag() == 0.0);
  }

  SUBCASE("non-finite coefficients rejected") {
    CHECK_THROWS_AS(characteristic_roots_general(std::nan(""), 0.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("random cubics: Vieta residuals and conjugate pairing") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double c2 = unif(rng), c1 = unif(rng), c0 = unif(rng);
    const auto roots = characteristic_roots_general(c2, c1, c0);
    const complexd sum = roots[0] + roots[1] + roots[2];
    const complexd pairsum = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
    const complexd prod = roots[0] * roots[1] * roots[2];
    const double scale = std::max({1.0, std::abs(c2), std::abs(c1), std::abs(c0)});
    CHECK(std::abs(sum + c2) < 1e-10 * scale);
    CHECK(std::abs(pairsum - c1) < 1e-9 * scale * scale);
    CHECK(std::abs(prod + c0) < 1e-9 * scale * scale * scale);
    // roots with nonzero imaginary parts come in exact conjugate pairs
    int complex_count = 0;
    for (const auto& z : roots) complex_count += z.imag() != 0.0;
    CHECK((complex_count == 0 || complex_count == 2));
    if (complex_count == 2) {
      CHECK(roots[1].real() == roots[2].real());
      CHECK(roots[1].imag() == -roots[2].imag());
    }
  }
}
