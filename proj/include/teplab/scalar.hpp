#pragma once

// Scalar-function shims so the kernel evaluators can be instantiated at
// double, long double and (on GCC/x86-64) __float128. The quad path backs
// the high-precision reference sums used to quantify cancellation.

#include <cmath>
#include <complex>

#if defined(__GNUC__) && defined(__x86_64__)
#include <quadmath.h>
#define TEPLAB_HAS_FLOAT128 1
#endif

namespace teplab::fp {

inline double exp(double x) { return std::exp(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double abs(double x) { return std::fabs(x); }

inline long double exp(long double x) { return std::exp(x); }
inline long double sin(long double x) { return std::sin(x); }
inline long double cos(long double x) { return std::cos(x); }
inline long double sqrt(long double x) { return std::sqrt(x); }
inline long double abs(long double x) { return std::fabs(x); }

#ifdef TEPLAB_HAS_FLOAT128
inline __float128 exp(__float128 x) { return expq(x); }
inline __float128 sin(__float128 x) { return sinq(x); }
inline __float128 cos(__float128 x) { return cosq(x); }
inline __float128 sqrt(__float128 x) { return sqrtq(x); }
inline __float128 abs(__float128 x) { return fabsq(x); }
#endif

// exp(z) for std::complex<S> without relying on std::exp(complex<S>)
// being specialised for extended scalars.
template <typename S>
std::complex<S> cexp(const std::complex<S>& z) {
  const S m = exp(z.real());
  return {m * cos(z.imag()), m * sin(z.imag())};
}

}  // namespace teplab::fp
