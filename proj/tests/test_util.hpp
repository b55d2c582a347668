#pragma once

#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "booth/series.hpp"

namespace booth::testutil {

// Independent coefficient oracle: trapezoid discretization of the Cauchy
// integral c_n = (1/2 pi i) \oint f(z)/z^{n+1} dz on |z| = rho. Exact up to
// the aliasing tail rho^{samples}, so rho = 0.5 with 512 samples gives
// ~1e-15 for bounded f.
inline std::vector<cdouble> cauchy_coefficients(
    const std::function<cdouble(cdouble)>& f, double rho, int count,
    int samples = 512) {
  std::vector<cdouble> c(static_cast<size_t>(count) + 1);
  for (int k = 0; k < samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    const cdouble z = std::polar(rho, th);
    const cdouble fz = f(z);
    for (int n = 0; n <= count; ++n)
      c[n] += fz * std::polar(std::pow(rho, -n), -n * th);
  }
  for (auto& v : c) v /= static_cast<double>(samples);
  return c;
}

inline Series random_series(std::mt19937& rng, int order, double magnitude = 1.0) {
  std::uniform_real_distribution<double> u(-magnitude, magnitude);
  Series s(order);
  for (int k = 0; k <= order; ++k) s[k] = cdouble(u(rng), u(rng));
  return s;
}

inline double max_coeff_diff(const Series& a, const Series& b, int upto) {
  double m = 0.0;
  for (int k = 0; k <= upto; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace booth::testutil
