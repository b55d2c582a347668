#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace booth {

struct QuadratureNonConvergence : std::runtime_error {
  QuadratureNonConvergence()
      : std::runtime_error("adaptive quadrature failed to reach tolerance") {}
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
// Column 0: abscissa, column 1: Gauss weight, column 2: Kronrod weight.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529}};

template <class T, class F>
T gk15(const F& f, double a, double b, double& err) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T y0 = f(mid);
  T g7 = kGK15[0][1] * y0;
  T k15 = kGK15[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGK15[i][0];
    T yi = f(mid + dx) + f(mid - dx);
    if (kGK15[i][1] != 0.0) g7 += kGK15[i][1] * yi;
    k15 += kGK15[i][2] * yi;
  }
  g7 *= h;
  k15 *= h;
  err = std::abs(k15 - g7);
  return k15;
}

}  // namespace detail

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod 7/15 on [a, b]. T is double or cdouble.
template <class T, class F>
QuadResult<T> integrate_adaptive(const F& f, double a, double b,
                                 double abs_tol = 1e-10, int max_depth = 24) {
  struct Rec {
    static void go(const F& f, double a, double b, double tol, int depth,
                   int max_depth, T& acc, double& err_acc, bool& ok) {
      double err;
      T v = detail::gk15<T>(f, a, b, err);
      if (err <= tol || depth >= max_depth) {
        acc += v;
        err_acc += err;
        if (err > tol && depth >= max_depth) ok = false;
        return;
      }
      const double mid = 0.5 * (a + b);
      go(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc, err_acc, ok);
      go(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc, err_acc, ok);
    }
  };
  QuadResult<T> r;
  bool ok = true;
  Rec::go(f, a, b, abs_tol, 0, max_depth, r.value, r.error, ok);
  r.converged = ok;
  return r;
}

/// Kahan-compensated accumulator for long real sums.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace booth
