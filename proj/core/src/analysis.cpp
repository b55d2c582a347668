#include "booth/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "booth/quadrature.hpp"

namespace booth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMemberTol = 1e-12;
constexpr double kBoundaryTol = 1e-6;

struct SampleFn {
  // w(z) for the subordination quantity, closed-form when available.
  std::function<cdouble(cdouble)> w;
  bool closed_form = false;
};

SampleFn bs_quantity(const FunctionSpec& f) {
  SampleFn s;
  if (f.pointwise && f.pointwise_deriv) {
    auto fv = f.pointwise;
    auto fd = f.pointwise_deriv;
    s.w = [fv, fd](cdouble z) { return z * fd(z) / fv(z) - 1.0; };
    s.closed_form = true;
  } else {
    Series ser = f.series;
    s.w = [ser](cdouble z) { return z * eval_deriv(ser, z) / eval(ser, z) - 1.0; };
  }
  return s;
}

SampleFn bk_quantity(const FunctionSpec& f) {
  SampleFn s;
  if (f.pointwise_deriv && f.pointwise_deriv2) {
    auto fd = f.pointwise_deriv;
    auto fd2 = f.pointwise_deriv2;
    s.w = [fd, fd2](cdouble z) { return z * fd2(z) / fd(z); };
    s.closed_form = true;
  } else {
    Series d1 = derivative(f.series);
    Series d2 = derivative(d1);
    s.w = [d1, d2](cdouble z) { return z * eval(d2, z) / eval(d1, z); };
  }
  return s;
}

cdouble denominator_at(const FunctionSpec& f, cdouble z, bool bk) {
  if (bk) {
    if (f.pointwise_deriv) return f.pointwise_deriv(z);
    return eval_deriv(f.series, z);
  }
  if (f.pointwise) return f.pointwise(z);
  return eval(f.series, z);
}

MembershipReport membership_impl(const FunctionSpec& f, BoothParam p,
                                 const GridSpec& grid, bool bk) {
  p.require_region();
  if (!f.normalized)
    throw std::invalid_argument("membership tests need a normalized function");
  const SampleFn sfn = bk ? bk_quantity(f) : bs_quantity(f);
  MembershipReport rep;
  rep.grid = grid;
  double worst = -std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const cdouble z = std::polar(r, 2.0 * kPi * k / grid.angles);
      // A vanishing f (resp. f') inside the disk already rules membership out.
      if (std::abs(denominator_at(f, z, bk)) < 1e-12) {
        rep.verdict = Verdict::non_member;
        rep.worst_margin = std::numeric_limits<double>::infinity();
        rep.witness = z;
        return rep;
      }
      const cdouble w = sfn.w(z);
      const double q = region_contains(w, p);
      if (q > worst) {
        worst = q;
        rep.witness = z;
        rep.witness_image = w;
      }
    }
  }
  rep.worst_margin = worst;
  if (worst <= kMemberTol) {
    rep.verdict = Verdict::member;
  } else if (worst <= kBoundaryTol) {
    rep.verdict = Verdict::member;
    rep.boundary_touching = true;
  } else {
    rep.verdict = Verdict::non_member;
  }
  return rep;
}

}  // namespace

GridSpec default_grid() {
  GridSpec g;
  g.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  g.angles = 256;
  return g;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::non_member: return "non_member";
    default: return "inconclusive";
  }
}

LogCoefficients log_coefficients(const FunctionSpec& f, int count) {
  if (!f.normalized)
    throw std::invalid_argument("logarithmic coefficients need a normalized function");
  if (f.series.order() < count + 1)
    throw std::invalid_argument("series order too small for requested gamma count");
  // f/z has c0 = 1.
  Series fz(f.series.order() - 1);
  for (int k = 0; k <= fz.order(); ++k) fz[k] = f.series[k + 1];
  const Series g = log_series(fz);
  LogCoefficients lc;
  lc.gamma.resize(static_cast<size_t>(count));
  for (int n = 1; n <= count; ++n) lc.gamma[n - 1] = 0.5 * g[n];
  return lc;
}

AreaReport dirichlet_area(const FunctionSpec& f, double r) {
  if (!(r > 0.0 && r <= 1.0))
    throw std::invalid_argument("dirichlet_area needs r in (0, 1]");
  const Series& s = f.series;
  const int order = s.order();

  // Tail estimate from the growth of the trailing coefficients. Short
  // inputs are taken to be exact polynomials: their leading coefficients
  // say nothing about a tail, and Parseval is exact for them at any r.
  double rho = 0.0;
  if (order >= 16)
    for (int k = order - 7; k <= order; ++k) {
    const double m = std::abs(s[k]);
    if (m > 0.0) rho = std::max(rho, std::pow(m, 1.0 / k));
  }
  const double g = rho * r;
  if (g >= 1.0) throw TailTooLarge();
  if (g > 0.0) {
    const double g2 = g * g;
    const double tail =
        kPi * (order + 1) * std::pow(g2, order + 1) / ((1.0 - g2) * (1.0 - g2));
    if (tail > 1e-6) throw TailTooLarge();
  }

  KahanSum acc;
  double r2n = 1.0;
  const double r2 = r * r;
  for (int n = 1; n <= order; ++n) {
    r2n *= r2;
    const double m = std::abs(s[n]);
    acc.add(n * m * m * r2n);
  }

  AreaReport rep;
  rep.radius = r;
  rep.parseval_value = kPi * acc.value();
  rep.quadrature_value = area_quadrature(f, r);
  if (f.name == "falpha") {
    const double a = f.params.at("alpha");
    const double d = 1.0 - a * a;
    rep.stated_form_value = kPi / (d * d);
    rep.termwise_formula_value = kPi * (1.0 + a * a) / (d * d);
    rep.has_closed_forms = true;
  }
  return rep;
}

double area_quadrature(const FunctionSpec& f, double r) {
  std::function<cdouble(cdouble)> fd;
  if (f.pointwise_deriv) {
    fd = f.pointwise_deriv;
  } else {
    Series s = f.series;
    fd = [s](cdouble z) { return eval_deriv(s, z); };
  }
  auto tensor = [&](int m) {
    const double h = r / m;
    const double dth = 2.0 * kPi / m;
    KahanSum acc;
    for (int i = 0; i < m; ++i) {
      const double rho = (i + 0.5) * h;
      double ring = 0.0;
      for (int j = 0; j < m; ++j) {
        const cdouble v = fd(std::polar(rho, (j + 0.5) * dth));
        ring += std::norm(v);
      }
      acc.add(ring * rho);
    }
    return acc.value() * h * dth;
  };
  const double i1 = tensor(512);
  const double i2 = tensor(1024);
  const double value = (4.0 * i2 - i1) / 3.0;  // midpoint rule is O(h^2)
  if (std::abs(i2 - i1) / 3.0 > 2e-3 * std::abs(value))
    throw QuadratureNonConvergence();
  return value;
}

MembershipReport bs_membership(const FunctionSpec& f, BoothParam p,
                               const GridSpec& grid) {
  return membership_impl(f, p, grid, false);
}

MembershipReport bk_membership(const FunctionSpec& f, BoothParam p,
                               const GridSpec& grid) {
  return membership_impl(f, p, grid, true);
}

FunctionSpec bs_generate(const FunctionSpec& q, int order) {
  FunctionSpec f;
  f.name = "bs_gen(" + q.name + ")";
  f.series = bs_generated_series(q.series.truncated(order));
  f.normalized = true;
  return f;
}

FunctionSpec bk_generate(const FunctionSpec& q, int order) {
  FunctionSpec f;
  f.name = "bk_gen(" + q.name + ")";
  f.series = bk_generated_series(q.series.truncated(order));
  f.normalized = true;
  return f;
}

RangeReport growth_bounds_check(const FunctionSpec& f, BoothParam p,
                                const GridSpec& grid, double tol) {
  p.require_convex();
  const FunctionSpec L = build_L(p, 8);
  RangeReport rep;
  rep.pass = true;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -rep.min_value;
  rep.worst_slack = -std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    const double lo = L.pointwise(cdouble(-r)).real();
    const double hi = L.pointwise(cdouble(r)).real();
    for (int k = 0; k < grid.angles; ++k) {
      const cdouble z = std::polar(r, 2.0 * kPi * k / grid.angles);
      const double v =
          (f.pointwise ? f.pointwise(z) : eval(f.series, z)).real();
      rep.min_value = std::min(rep.min_value, v);
      rep.max_value = std::max(rep.max_value, v);
      const double slack = std::max(lo - v, v - hi);
      if (slack > rep.worst_slack) {
        rep.worst_slack = slack;
        rep.witness = z;
      }
      if (slack > tol) rep.pass = false;
    }
  }
  // Report the bounds at the outermost radius for reference.
  const double rmax = *std::max_element(grid.radii.begin(), grid.radii.end());
  rep.lower_bound = L.pointwise(cdouble(-rmax)).real();
  rep.upper_bound = L.pointwise(cdouble(rmax)).real();
  return rep;
}

DistortionBounds distortion_bounds(BoothParam p) {
  p.require_convex();
  if (p.alpha <= 0.0)
    throw std::invalid_argument("distortion bounds need alpha > 0");
  const double rs = radius_starlike(p);
  const double frs = 1.0;  // F_alpha(r_s) = 1 since 1 - alpha r_s^2 = r_s
  DistortionBounds b;
  b.fprime_low = (frs - 1.0) / (1.0 + rs * rs);
  b.fprime_high = (frs + 1.0) / (1.0 - rs * rs);
  const double a = p.alpha;
  auto fa = [a](double t) { return t / (1.0 - a * t * t); };
  auto q1 = integrate_adaptive<double>(
      [&](double t) { return fa(t) / (1.0 + t * t); }, 0.0, rs, 1e-12);
  auto q2 = integrate_adaptive<double>(
      [&](double t) { return fa(t) / (1.0 - t * t); }, 0.0, rs, 1e-12);
  if (!q1.converged || !q2.converged) throw QuadratureNonConvergence();
  b.fmod_low = q1.value - std::atan(rs);
  b.fmod_high = 0.5 * std::log((1.0 + rs) / (1.0 - rs)) + q2.value;
  return b;
}

double fekete_szego(const FunctionSpec& f, cdouble mu) {
  if (!f.normalized || f.series.order() < 3)
    throw std::invalid_argument("Fekete-Szego needs a normalized series of order >= 3");
  const cdouble a2 = f.series[2], a3 = f.series[3];
  return std::abs(a3 - mu * a2 * a2);
}

double fs_bound(cdouble mu) {
  return std::max(1.0, std::abs(1.5 * mu - 1.0)) / 6.0;
}

CoefficientReport coefficient_checks(const FunctionSpec& f, int gamma_count) {
  CoefficientReport rep;
  const cdouble a2 = f.series.order() >= 2 ? f.series[2] : cdouble(0.0);
  const cdouble a3 = f.series.order() >= 3 ? f.series[3] : cdouble(0.0);
  rep.a2_margin = 0.5 - std::abs(a2);
  rep.a3_margin = 1.0 / 6.0 - std::abs(a3);
  const int n_max = std::min(gamma_count, f.series.order() - 1);
  const LogCoefficients lc = log_coefficients(f, n_max);
  rep.gamma_margins.resize(static_cast<size_t>(n_max));
  rep.bk_pass = rep.a2_margin >= -kMemberTol && rep.a3_margin >= -kMemberTol;
  rep.bs_pass = true;
  for (int n = 1; n <= n_max; ++n) {
    rep.gamma_margins[n - 1] = 0.5 / n - std::abs(lc.gamma[n - 1]);
    rep.bs_pass = rep.bs_pass && rep.gamma_margins[n - 1] >= -kMemberTol;
  }
  return rep;
}

double log_energy(const FunctionSpec& f, int count) {
  const LogCoefficients lc = log_coefficients(f, count);
  KahanSum acc;
  for (const cdouble& g : lc.gamma) acc.add(std::norm(g));
  return acc.value();
}

double bs_energy_bound(BoothParam p) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0))
    throw std::invalid_argument("energy bound needs alpha in (0, 1)");
  const double d = 1.0 - p.alpha;
  return (kPi * kPi / 45.0 - 2.0 * cos_sum(p.alpha) / (kPi * kPi)) / (d * d);
}

double strongly_starlike_measure(const FunctionSpec& f, double phi,
                                 const std::vector<double>& radii) {
  const SampleFn sfn = bs_quantity(f);
  double sup = 0.0;
  for (double r : radii) {
    const cdouble w = sfn.w(std::polar(r, phi));
    if (std::abs(w) < 1e-15) continue;  // arg undefined, contributes 0
    sup = std::max(sup, 2.0 / kPi * std::abs(std::arg(w)));
  }
  return sup;
}

RangeReport bk_re_range_check(const FunctionSpec& f, BoothParam p,
                              const GridSpec& grid) {
  p.require_region();
  const SampleFn sfn = bk_quantity(f);
  RangeReport rep;
  rep.lower_bound = p.alpha / (p.alpha - 1.0);
  rep.upper_bound = (2.0 - p.alpha) / (1.0 - p.alpha);
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -rep.min_value;
  rep.pass = true;
  rep.worst_slack = -std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const cdouble z = std::polar(r, 2.0 * kPi * k / grid.angles);
      if (std::abs(denominator_at(f, z, true)) < 1e-12) {
        rep.pass = false;
        rep.witness = z;
        continue;
      }
      const double v = 1.0 + sfn.w(z).real();
      rep.min_value = std::min(rep.min_value, v);
      rep.max_value = std::max(rep.max_value, v);
      const double slack = std::max(rep.lower_bound - v, v - rep.upper_bound);
      if (slack > rep.worst_slack) {
        rep.worst_slack = slack;
        rep.witness = z;
      }
      if (slack >= 0.0) rep.pass = false;
    }
  }
  return rep;
}

SubordinationFinding check_log_subordination(const FunctionSpec& f, BoothParam p,
                                             PAlphaExponent conv,
                                             int boundary_order) {
  const FunctionSpec pt = build_p_tilde(p, boundary_order, conv);
  // Target boundary polygon just inside the unit circle.
  const int m = 4096;
  const double rho = 0.999;
  std::vector<cdouble> poly(m);
  for (int k = 0; k < m; ++k)
    poly[k] = eval(pt.series, std::polar(rho, 2.0 * kPi * k / m));

  auto inside = [&poly, m](cdouble w) {
    // Winding number by signed crossings.
    int wn = 0;
    for (int i = 0; i < m; ++i) {
      const cdouble a = poly[i] - w;
      const cdouble b = poly[(i + 1) % m] - w;
      if (a.imag() <= 0.0) {
        if (b.imag() > 0.0 && (a.real() * b.imag() - a.imag() * b.real()) > 0.0) ++wn;
      } else {
        if (b.imag() <= 0.0 && (a.real() * b.imag() - a.imag() * b.real()) < 0.0) --wn;
      }
    }
    return wn != 0;
  };

  SubordinationFinding out;
  out.contained = true;
  for (double r : {0.5, 0.8, 0.95}) {
    for (int k = 0; k < 128; ++k) {
      const cdouble z = std::polar(r, 2.0 * kPi * k / 128);
      const cdouble fz = f.pointwise ? f.pointwise(z) : eval(f.series, z);
      const cdouble w = std::log(fz / z);
      if (!inside(w)) {
        out.contained = false;
        ++out.outside_count;
        out.worst_point = w;
      }
    }
  }
  return out;
}

}  // namespace booth
