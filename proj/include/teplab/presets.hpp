#pragma once

// Named radial data presets used by the experiment drivers.

#include <cmath>
#include <stdexcept>
#include <string>

#include "teplab/quadrature.hpp"
#include "teplab/singular_limit.hpp"

namespace teplab {

/// gaussian                       fhat(r) = exp(-r^2),   mean 1, lip ~ 0.6382
/// mean-zero-gaussian-derivative  fhat(r) = r exp(-r^2), mean 0, lip 1
/// indicator                      fhat = 1_{[0,1]},      mean 1, lip 1
/// constant-profile               fhat = 1,              mean 1, lip 0
inline RadialData radial_preset(const std::string& name) {
  if (name == "gaussian")
    return {[](double r) { return complexd{std::exp(-r * r), 0.0}; }, 1.0,
            0.638172686330801};  // sup_r (1 - exp(-r^2))/r, attained near r = 1.1209
  if (name == "mean-zero-gaussian-derivative" || name == "mean-zero")
    return {[](double r) { return complexd{r * std::exp(-r * r), 0.0}; }, 0.0, 1.0};
  if (name == "indicator")
    return {[](double r) { return complexd{r <= 1.0 ? 1.0 : 0.0, 0.0}; }, 1.0, 1.0};
  if (name == "constant-profile" || name == "constant")
    return {[](double) { return complexd{1.0, 0.0}; }, 1.0, 0.0};
  throw std::invalid_argument("unknown radial preset: " + name);
}

/// Triple with the named profile in every slot (u0, u1, theta0); experiment
/// drivers override single slots where a hypothesis demands it.
inline DataTriple preset_data(const std::string& name) {
  const RadialData d = radial_preset(name);
  return {d, d, d};
}

}  // namespace teplab
