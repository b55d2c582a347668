#include "booth/polylog.hpp"

#include <cmath>
#include <numbers>

#include "booth/quadrature.hpp"

namespace booth {

namespace {
constexpr double kPi = std::numbers::pi;

void check_disk(cdouble z) {
  if (std::abs(z) > 1.0 + 1e-12) throw OutsideUnitDisk();
}
}  // namespace

PolylogResult li(int s, cdouble z, int terms) {
  if (s < 2) throw std::invalid_argument("li needs integer s >= 2");
  if (terms < 1) throw std::invalid_argument("li needs terms >= 1");
  check_disk(z);
  KahanSum re, im;
  cdouble zn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    zn *= z;
    const double w = std::pow(static_cast<double>(n), -s);
    re.add(zn.real() * w);
    im.add(zn.imag() * w);
  }
  PolylogResult r;
  r.value = {re.value(), im.value()};
  const double rho = std::min(std::abs(z), 1.0);
  // For rho < 1 the geometric bound is tighter; on the circle use the
  // integral comparison 1/((s-1) N^{s-1}).
  const double circle_tail =
      1.0 / ((s - 1) * std::pow(static_cast<double>(terms), s - 1));
  if (rho < 1.0) {
    const double geom =
        std::pow(rho, terms + 1) / ((1.0 - rho) * std::pow(terms + 1.0, s));
    r.tail_bound = std::min(circle_tail, geom);
  } else {
    r.tail_bound = circle_tail;
  }
  return r;
}

PolylogResult li_auto(int s, cdouble z, double tol) {
  if (s < 2) throw std::invalid_argument("li needs integer s >= 2");
  check_disk(z);
  // 1/((s-1) N^{s-1}) <= tol
  const double n = std::pow(1.0 / ((s - 1) * tol), 1.0 / (s - 1));
  const int terms = std::max(8, static_cast<int>(std::ceil(n)) + 1);
  return li(s, z, terms);
}

cdouble li4_integral(cdouble z) {
  check_disk(z);
  if (std::abs(z - cdouble(1.0)) < 1e-14)
    throw std::invalid_argument("li4_integral: z = 1 not supported");
  // u = log(1/t):  Li4(z) = -(1/2) int_0^inf u^2 log(1 - z e^{-u}) du.
  auto integrand = [z](double u) {
    return u * u * std::log(1.0 - z * std::exp(-u));
  };
  // Beyond u = 45 the integrand is below u^2 e^{-u} ~ 1e-16.
  auto q = integrate_adaptive<cdouble>(integrand, 0.0, 45.0, 1e-11);
  if (!q.converged || q.error > 1e-8) throw QuadratureNonConvergence();
  return -0.5 * q.value;
}

double cos_sum(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("cos_sum needs alpha in (0, 1)");
  const double theta = (2.0 - alpha) * kPi;
  const cdouble zp = std::polar(1.0, theta);
  const cdouble zm = std::conj(zp);
  const cdouble s = 0.5 * (li_auto(4, zp).value + li_auto(4, zm).value);
  return s.real();
}

double li4_real_on_circle(double theta) {
  double th = std::fmod(theta, 2.0 * kPi);
  if (th < 0.0) th += 2.0 * kPi;
  const double t2 = th * th;
  return kPi * kPi * kPi * kPi / 90.0 - kPi * kPi * t2 / 12.0 +
         kPi * t2 * th / 12.0 - t2 * t2 / 48.0;
}

}  // namespace booth
