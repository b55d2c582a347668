#pragma once

#include <vector>

#include "booth/functions.hpp"
#include "booth/polylog.hpp"
#include "booth/region.hpp"

namespace booth {

struct TailTooLarge : std::runtime_error {
  TailTooLarge() : std::runtime_error("series tail too large at the requested radius") {}
};

/// Deterministic polar sampling grid: a list of radii times a uniform
/// angular subdivision.
struct GridSpec {
  std::vector<double> radii;
  int angles = 256;
};

GridSpec default_grid();

enum class Verdict { member, non_member, inconclusive };

const char* verdict_name(Verdict v);

struct MembershipReport {
  Verdict verdict = Verdict::inconclusive;
  bool boundary_touching = false;
  double worst_margin = 0.0;   // max of Q over samples
  cdouble witness{};           // arg-max sample point z
  cdouble witness_image{};     // w(z) at the witness
  GridSpec grid;
};

struct LogCoefficients {
  std::vector<cdouble> gamma;  // gamma[n-1] = gamma_n
};

struct AreaReport {
  double parseval_value = 0.0;
  double quadrature_value = 0.0;
  double radius = 0.0;
  // Filled for F_alpha only: a stated closed form pi/(1-a^2)^2 and
  // the term-wise Parseval limit pi (1+a^2)/(1-a^2)^2.
  double stated_form_value = 0.0;
  double termwise_formula_value = 0.0;
  bool has_closed_forms = false;
};

struct RangeReport {
  double min_value = 0.0;
  double max_value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool pass = false;
  double worst_slack = 0.0;  // positive means a violation
  cdouble witness{};
};

struct DistortionBounds {
  double fprime_low = 0.0;
  double fprime_high = 0.0;
  double fmod_low = 0.0;
  double fmod_high = 0.0;
};

struct CoefficientReport {
  double a2_margin = 0.0;  // 1/2 - |a2|   (BK context)
  double a3_margin = 0.0;  // 1/6 - |a3|   (BK context)
  std::vector<double> gamma_margins;  // 1/(2n) - |gamma_n|  (BS context)
  bool bk_pass = false;
  bool bs_pass = false;
};

/// gamma_n from log(f/z) = sum 2 gamma_n z^n, n = 1..N.
/// Needs f.series.order() >= N + 1.
LogCoefficients log_coefficients(const FunctionSpec& f, int count);

AreaReport dirichlet_area(const FunctionSpec& f, double r);
double area_quadrature(const FunctionSpec& f, double r);

MembershipReport bs_membership(const FunctionSpec& f, BoothParam p,
                               const GridSpec& grid = default_grid());
MembershipReport bk_membership(const FunctionSpec& f, BoothParam p,
                               const GridSpec& grid = default_grid());

FunctionSpec bs_generate(const FunctionSpec& q, int order);
FunctionSpec bk_generate(const FunctionSpec& q, int order);

RangeReport growth_bounds_check(const FunctionSpec& f, BoothParam p,
                                const GridSpec& grid, double tol = 1e-9);

DistortionBounds distortion_bounds(BoothParam p);

double fekete_szego(const FunctionSpec& f, cdouble mu);
double fs_bound(cdouble mu);

CoefficientReport coefficient_checks(const FunctionSpec& f, int gamma_count = 40);

double log_energy(const FunctionSpec& f, int count);
double bs_energy_bound(BoothParam p);

double strongly_starlike_measure(const FunctionSpec& f, double phi,
                                 const std::vector<double>& radii);

RangeReport bk_re_range_check(const FunctionSpec& f, BoothParam p,
                              const GridSpec& grid = default_grid());

/// Numerical containment check for log(f/z) against the image of the
/// P-tilde target under a chosen exponent convention. Used to adjudicate
/// the exponent discrepancy between the stated P_alpha and the
/// proof-side convention.
struct SubordinationFinding {
  bool contained = false;
  int outside_count = 0;
  cdouble worst_point{};
};
SubordinationFinding check_log_subordination(const FunctionSpec& f, BoothParam p,
                                             PAlphaExponent conv,
                                             int boundary_order = 4096);

}  // namespace booth
