#include "booth/region.hpp"

#include <cmath>

namespace booth {

void BoothParam::require_pointwise() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
}

void BoothParam::require_region() const {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("region operations need alpha in [0, 1)");
}

void BoothParam::require_convex() const {
  if (!(alpha >= 0.0 && alpha <= kConvexAlphaMax + 1e-15))
    throw std::invalid_argument("operation needs alpha in [0, 3 - 2 sqrt(2)]");
}

cdouble f_alpha_eval(cdouble z, BoothParam p) {
  p.require_pointwise();
  const cdouble den = 1.0 - p.alpha * z * z;
  if (std::abs(den) < 1e-14) throw PoleAtInput();
  return z / den;
}

cdouble f_alpha_deriv(cdouble z, BoothParam p) {
  p.require_pointwise();
  const cdouble den = 1.0 - p.alpha * z * z;
  if (std::abs(den) < 1e-14) throw PoleAtInput();
  return (1.0 + p.alpha * z * z) / (den * den);
}

Series f_alpha_series(BoothParam p, int order) {
  p.require_pointwise();
  if (order < 1) throw std::invalid_argument("F_alpha series needs order >= 1");
  Series s(order);
  double pw = 1.0;  // alpha^{n-1}
  for (int k = 1; k <= order; k += 2) {
    s[k] = pw;
    pw *= p.alpha;
  }
  return s;
}

double region_contains(cdouble w, BoothParam p) {
  p.require_region();
  const double x = w.real(), y = w.imag();
  const double r2 = x * x + y * y;
  const double am = 1.0 - p.alpha, ap = 1.0 + p.alpha;
  return r2 * r2 - x * x / (am * am) - y * y / (ap * ap);
}

BoundaryPoint boundary_point(double theta, BoothParam p) {
  p.require_region();
  const double den = 1.0 + p.alpha * p.alpha - 2.0 * p.alpha * std::cos(2.0 * theta);
  BoundaryPoint b;
  b.theta = theta;
  b.x = (1.0 - p.alpha) * std::cos(theta) / den;
  b.y = (1.0 + p.alpha) * std::sin(theta) / den;
  return b;
}

std::pair<double, double> modulus_bounds(BoothParam p) {
  p.require_region();
  return {1.0 / (1.0 + p.alpha), 1.0 / (1.0 - p.alpha)};
}

double radius_starlike(BoothParam p) {
  p.require_pointwise();
  // Stable form of (sqrt(1+4a)-1)/(2a), valid down to alpha = 0.
  return 2.0 / (std::sqrt(1.0 + 4.0 * p.alpha) + 1.0);
}

double strongly_starlike_order(BoothParam p, double phi) {
  p.require_region();
  if (!(phi > 0.0 && phi < 2.0 * 3.14159265358979323846))
    throw std::invalid_argument("phi must lie in (0, 2 pi)");
  const double pi = 3.14159265358979323846;
  const double c = std::cos(phi);
  if (std::abs(c) < 1e-15) return 1.0;  // tan pole: arctan limit
  const double g =
      (2.0 / pi) * std::atan((1.0 + p.alpha) / (1.0 - p.alpha) * std::abs(std::tan(phi)));
  return std::min(g, 1.0);
}

}  // namespace booth
