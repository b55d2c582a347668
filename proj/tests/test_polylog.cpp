#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "booth/polylog.hpp"
#include "booth/quadrature.hpp"

using namespace booth;

namespace {
constexpr double kPi = std::numbers::pi;

// Direct alternating-series oracle for Li_s(-1) = (2^{1-s} - 1) zeta(s),
// summed term by term with compensation.
double alternating_oracle(int s, int terms) {
  KahanSum acc;
  for (int n = 1; n <= terms; ++n)
    acc.add((n % 2 ? -1.0 : 1.0) * std::pow(static_cast<double>(n), -s));
  return acc.value();
}
}  // namespace

TEST_CASE("li basics") {
  CHECK(std::abs(li(4, cdouble(0.0), 10).value) == 0.0);
  const double z4_1 = kPi * kPi * kPi * kPi / 90.0;
  CHECK(std::abs(li_auto(4, cdouble(1.0)).value.real() - z4_1) < 1e-10);
  CHECK(std::abs(li_auto(4, cdouble(-1.0)).value.real() -
                 alternating_oracle(4, 2000000)) < 1e-10);
  CHECK(std::abs(li_auto(4, cdouble(-1.0)).value.real() + 7.0 * z4_1 * 90.0 / 720.0) < 1e-10);
  CHECK_THROWS_AS(li(4, cdouble(1.5), 10), OutsideUnitDisk);
  CHECK_THROWS_AS(li(1, cdouble(0.5), 10), std::invalid_argument);
}

TEST_CASE("tail bound is honored") {
  // s = 4: tail after N terms <= 1/(3 N^3); the reported bound must cover
  // the true remainder.
  for (int terms : {10, 50, 200}) {
    const cdouble z = std::polar(1.0, 1.1);
    const PolylogResult coarse = li(4, z, terms);
    const PolylogResult fine = li(4, z, 20000);
    CHECK(coarse.tail_bound <= 1.0 / (3.0 * std::pow(terms, 3)) + 1e-18);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
  }
  // strictly inside the disk the geometric bound kicks in
  CHECK(li(4, cdouble(0.5), 40).tail_bound < 1e-13);
}

TEST_CASE("conjugate symmetry") {
  for (double th : {0.3, 1.2, 2.9}) {
    const cdouble z = std::polar(0.97, th);
    const cdouble a = li_auto(4, z).value;
    const cdouble b = li_auto(4, std::conj(z)).value;
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
  }
}

TEST_CASE("real part on the circle matches the Bernoulli quartic") {
  // Verify the closed-form oracle against direct summation before use.
  for (double th : {0.5, 1.0, 2.0, 3.5, 5.0}) {
    const double direct = li_auto(4, std::polar(1.0, th), 1e-12).value.real();
    CHECK(std::abs(direct - li4_real_on_circle(th)) < 1e-9);
  }
}

TEST_CASE("integral form agrees with the series") {
  CHECK(std::abs(li4_integral(cdouble(0.0))) < 1e-12);
  CHECK(std::abs(li4_integral(cdouble(0.5)) - li(4, cdouble(0.5), 200).value) < 1e-8);
  const cdouble w = std::polar(1.0, kPi / 3.0);
  CHECK(std::abs(li4_integral(w) - li_auto(4, w).value) < 1e-8);
  // 20-point grid of the closed disk
  for (int i = 0; i < 20; ++i) {
    const double r = 0.2 + 0.8 * (i % 5) / 4.0;
    const double th = 0.3 + 2.0 * kPi * i / 20.0;
    const cdouble z = std::polar(r, th);
    CHECK(std::abs(li4_integral(z) - li_auto(4, z).value) < 1e-8);
  }
  CHECK_THROWS_AS(li4_integral(cdouble(2.0)), OutsideUnitDisk);
}

TEST_CASE("cos_sum against brute force") {
  for (double a : {0.25, 0.5, 0.75}) {
    KahanSum brute;
    for (int n = 1; n <= 1000000; ++n)
      brute.add(std::cos(kPi * (2.0 - a) * n) / (static_cast<double>(n) * n * n * n));
    CHECK(std::abs(cos_sum(a) - brute.value()) < 1e-10);
  }
  // alpha -> 1: sum cos(pi n)/n^4 = -7 pi^4/720
  CHECK(std::abs(cos_sum(1.0 - 1e-9) + 7.0 * std::pow(kPi, 4) / 720.0) < 1e-6);
  CHECK_THROWS_AS(cos_sum(0.0), std::invalid_argument);
}
