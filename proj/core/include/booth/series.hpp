#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace booth {

using cdouble = std::complex<double>;

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByNonUnit : SeriesError {
  DivisionByNonUnit() : SeriesError("series division requires |c0| above tolerance") {}
};
struct CompositionRequiresZeroConstant : SeriesError {
  CompositionRequiresZeroConstant() : SeriesError("inner series must have c0 = 0") {}
};
struct NonZeroConstantTerm : SeriesError {
  NonZeroConstantTerm() : SeriesError("series exp requires c0 = 0") {}
};
struct LogRequiresUnitConstant : SeriesError {
  LogRequiresUnitConstant() : SeriesError("series log requires c0 = 1") {}
};

/// Truncated power series c0 + c1 z + ... + cN z^N with exact-order
/// arithmetic. Immutable by convention: operations return new values.
class Series {
 public:
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
  }
  explicit Series(std::vector<cdouble> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("empty coefficient list");
    check_finite();
  }

  static Series constant(cdouble c0, int order) {
    Series s(order);
    s.c_[0] = c0;
    return s;
  }
  // The monomial z, padded to the requested order.
  static Series identity(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = 1.0;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const cdouble& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  cdouble& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<cdouble>& coeffs() const { return c_; }

  Series truncated(int new_order) const {
    if (new_order >= order()) {
      Series s(new_order);
      std::copy(c_.begin(), c_.end(), s.c_.begin());
      return s;
    }
    return Series(std::vector<cdouble>(c_.begin(), c_.begin() + new_order + 1));
  }

 private:
  void check_finite() const {
    for (const auto& v : c_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("non-finite series coefficient");
  }
  std::vector<cdouble> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Series& a, cdouble c);

// Cauchy product, truncated to min(order(a), order(b)).
Series mul(const Series& a, const Series& b);

// Requires |b.c0| >= tol; mul(result, b) reproduces a up to truncation.
Series div(const Series& a, const Series& b, double unit_tol = 1e-13);

// outer(inner(z)) with inner.c0 = 0, by Horner on series.
Series compose(const Series& outer, const Series& inner);

// exp/log by the ODE recurrence (exact order by order).
Series exp_series(const Series& a);
Series log_series(const Series& a);

// (a)^c = exp(c log a), principal branch, requires a.c0 = 1.
Series pow_series(const Series& a, cdouble c);

// Antiderivative with c0 = 0 (order goes up by one).
Series integrate(const Series& a);
// Term-wise derivative (order drops by one; derivative of a constant is 0).
Series derivative(const Series& a);

cdouble eval(const Series& a, cdouble z);
cdouble eval_deriv(const Series& a, cdouble z);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

bool is_normalized(const Series& s, double tol = 0.0);

/// A series from the normalized class: c0 = 0 and c1 = 1 exactly.
struct NormalizedSeries {
  explicit NormalizedSeries(Series s) : series(std::move(s)) {
    if (!is_normalized(series))
      throw std::invalid_argument("series is not normalized (need c0=0, c1=1)");
  }
  Series series;
};

}  // namespace booth
