#include "booth/series.hpp"

#include <algorithm>
#include <cmath>

namespace booth {

namespace {
int min_order(const Series& a, const Series& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

Series add(const Series& a, const Series& b) {
  const int n = min_order(a, b);
  Series r(n);
  for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
  return r;
}

Series sub(const Series& a, const Series& b) {
  const int n = min_order(a, b);
  Series r(n);
  for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
  return r;
}

Series scale(const Series& a, cdouble c) {
  Series r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = c * a[k];
  return r;
}

Series mul(const Series& a, const Series& b) {
  const int n = min_order(a, b);
  Series r(n);
  for (int k = 0; k <= n; ++k) {
    cdouble s = 0.0;
    for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
    r[k] = s;
  }
  return r;
}

Series div(const Series& a, const Series& b, double unit_tol) {
  if (std::abs(b[0]) < unit_tol) throw DivisionByNonUnit();
  const int n = min_order(a, b);
  Series r(n);
  for (int k = 0; k <= n; ++k) {
    cdouble s = a[k];
    for (int j = 0; j < k; ++j) s -= r[j] * b[k - j];
    r[k] = s / b[0];
  }
  return r;
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != cdouble(0.0)) throw CompositionRequiresZeroConstant();
  const int n = inner.order();
  // Horner: r = c_m + inner*(c_{m+1} + inner*(...))
  Series r = Series::constant(outer[outer.order()], n);
  for (int m = outer.order() - 1; m >= 0; --m) {
    r = mul(r, inner);
    r[0] += outer[m];
  }
  return r;
}

Series exp_series(const Series& a) {
  if (a[0] != cdouble(0.0)) throw NonZeroConstantTerm();
  const int n = a.order();
  Series r(n);
  r[0] = 1.0;
  // (exp a)' = a' (exp a):  n r_n = sum_{k=1..n} k a_k r_{n-k}
  for (int m = 1; m <= n; ++m) {
    cdouble s = 0.0;
    for (int k = 1; k <= m; ++k) s += static_cast<double>(k) * a[k] * r[m - k];
    r[m] = s / static_cast<double>(m);
  }
  return r;
}

Series log_series(const Series& a) {
  if (std::abs(a[0] - cdouble(1.0)) > 1e-13) throw LogRequiresUnitConstant();
  const int n = a.order();
  Series r(n);
  // a' = r' a:  m a_m = sum_{k=1..m} k r_k a_{m-k}
  for (int m = 1; m <= n; ++m) {
    cdouble s = static_cast<double>(m) * a[m];
    for (int k = 1; k < m; ++k) s -= static_cast<double>(k) * r[k] * a[m - k];
    r[m] = s / (static_cast<double>(m) * a[0]);
  }
  return r;
}

Series pow_series(const Series& a, cdouble c) {
  return exp_series(scale(log_series(a), c));
}

Series integrate(const Series& a) {
  Series r(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) r[k + 1] = a[k] / static_cast<double>(k + 1);
  return r;
}

Series derivative(const Series& a) {
  Series r(std::max(a.order() - 1, 0));
  for (int k = 1; k <= a.order(); ++k) r[k - 1] = static_cast<double>(k) * a[k];
  if (a.order() == 0) r[0] = 0.0;
  return r;
}

cdouble eval(const Series& a, cdouble z) {
  cdouble acc = a[a.order()];
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

cdouble eval_deriv(const Series& a, cdouble z) {
  if (a.order() == 0) return 0.0;
  cdouble acc = static_cast<double>(a.order()) * a[a.order()];
  for (int k = a.order() - 1; k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * a[k];
  return acc;
}

bool is_normalized(const Series& s, double tol) {
  if (s.order() < 1) return false;
  return std::abs(s[0]) <= tol && std::abs(s[1] - cdouble(1.0)) <= tol;
}

}  // namespace booth
