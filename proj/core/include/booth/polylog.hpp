#pragma once

#include <stdexcept>

#include "booth/series.hpp"

namespace booth {

struct OutsideUnitDisk : std::runtime_error {
  OutsideUnitDisk() : std::runtime_error("polylog argument outside the closed unit disk") {}
};

struct PolylogResult {
  cdouble value{};
  double tail_bound = 0.0;  // rigorous bound on the dropped tail
};

/// Partial sum of Li_s(z) = sum z^n / n^s through n = terms, with the tail
/// bounded by sum_{n>N} |z|^n / n^s <= 1/((s-1) N^{s-1}).
PolylogResult li(int s, cdouble z, int terms);

/// Chooses the term count from the tail bound to meet tol.
PolylogResult li_auto(int s, cdouble z, double tol = 1e-12);

/// Li4 via the integral -(1/2) int_0^1 log^2(1/t) log(1 - t z) / t dt,
/// evaluated after the substitution u = log(1/t).
cdouble li4_integral(cdouble z);

/// sum_{n>=1} cos(pi (2-alpha) n) / n^4, via the conjugate Li4 pair.
double cos_sum(double alpha);

/// Closed form of Re Li4(e^{i theta}) for theta in [0, 2 pi]:
/// pi^4/90 - pi^2 th^2/12 + pi th^3/12 - th^4/48 (Bernoulli polynomial).
double li4_real_on_circle(double theta);

}  // namespace booth
