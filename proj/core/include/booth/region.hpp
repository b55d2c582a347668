#pragma once

#include <stdexcept>
#include <utility>

#include "booth/series.hpp"

namespace booth {

struct PoleAtInput : std::runtime_error {
  PoleAtInput() : std::runtime_error("evaluation point is at a pole of F_alpha") {}
};

/// Parameter of the elliptic Booth lemniscate D(alpha) and its generating
/// function F_alpha(z) = z / (1 - alpha z^2).
struct BoothParam {
  double alpha = 0.0;

  // Pointwise evaluation of F_alpha admits the full range [0, 1];
  // region and bound operations need the bounded lemniscate, alpha < 1;
  // convexity-dependent results need alpha <= 3 - 2 sqrt(2).
  void require_pointwise() const;
  void require_region() const;
  void require_convex() const;
};

inline constexpr double kConvexAlphaMax = 0.17157287525380990;  // 3 - 2 sqrt(2)

/// Point of the boundary curve F_alpha(e^{i theta}).
struct BoundaryPoint {
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
};

cdouble f_alpha_eval(cdouble z, BoothParam p);
cdouble f_alpha_deriv(cdouble z, BoothParam p);
Series f_alpha_series(BoothParam p, int order);

/// Signed margin Q(w) = (x^2+y^2)^2 - x^2/(1-a)^2 - y^2/(1+a)^2.
/// Negative inside D(alpha); the origin sits on the (punctured) curve, Q = 0.
double region_contains(cdouble w, BoothParam p);

BoundaryPoint boundary_point(double theta, BoothParam p);

/// (1/(1+alpha), 1/(1-alpha)): the modulus range of F_alpha on |z| = 1.
std::pair<double, double> modulus_bounds(BoothParam p);

/// Positive root of alpha r^2 + r - 1 = 0, continuous limit 1 at alpha = 0.
double radius_starlike(BoothParam p);

/// gamma(alpha, phi) = (2/pi) arctan(((1+alpha)/(1-alpha)) |tan phi|),
/// clamped to (0, 1]; exactly 1 at the tan poles phi = pi/2, 3pi/2.
double strongly_starlike_order(BoothParam p, double phi);

}  // namespace booth
