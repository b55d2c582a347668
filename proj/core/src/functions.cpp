#include "booth/functions.hpp"

#include <cmath>
#include <numbers>

namespace booth {

namespace {

constexpr double kPi = std::numbers::pi;

Series integral_over_t(const Series& q) {
  if (q[0] != cdouble(0.0))
    throw std::invalid_argument("generator input q must vanish at 0");
  Series s(q.order());
  for (int k = 1; k <= q.order(); ++k) s[k] = q[k] / static_cast<double>(k);
  return s;
}

cdouble ftilde_closed(cdouble z, double alpha) {
  if (alpha < 1e-12) return z * std::exp(z);
  const double sa = std::sqrt(alpha);
  const cdouble base = (1.0 + sa * z) / (1.0 - sa * z);
  return z * std::pow(base, cdouble(1.0 / (2.0 * sa)));
}

// f-tilde'(z) = f-tilde(z) (1 + F_alpha(z)) / z, with limit 1 at z = 0.
cdouble ftilde_deriv_closed(cdouble z, double alpha) {
  if (std::abs(z) < 1e-12) return 1.0;
  return ftilde_closed(z, alpha) * (1.0 + z / (1.0 - alpha * z * z)) / z;
}

// fhat'(z) = exp(int_0^z F_alpha(t)/t dt) = ((1+sa z)/(1-sa z))^{1/(2 sa)}.
cdouble fhat_deriv_closed(cdouble z, double alpha) {
  if (alpha < 1e-12) return std::exp(z);
  const double sa = std::sqrt(alpha);
  return std::pow((1.0 + sa * z) / (1.0 - sa * z), cdouble(1.0 / (2.0 * sa)));
}

cdouble palpha_root(double alpha, PAlphaExponent conv) {
  const double arg =
      conv == PAlphaExponent::kStated ? kPi * (1.0 - alpha) * (1.0 - alpha)
                                      : kPi * (2.0 - alpha);
  return std::polar(1.0, arg);
}

Series palpha_series(double alpha, int order, PAlphaExponent conv) {
  const cdouble c = palpha_root(alpha, conv);
  const cdouble factor = cdouble(0.0, 2.0 / (kPi * (1.0 - alpha)));
  Series s(order);
  s[0] = 1.0;
  cdouble cn = 1.0;
  for (int n = 1; n <= order; ++n) {
    cn *= c;
    s[n] = factor * (1.0 - cn) / static_cast<double>(n);
  }
  return s;
}

}  // namespace

Series bs_generated_series(const Series& q) {
  const Series g = exp_series(integral_over_t(q));
  Series f(q.order());
  for (int k = 1; k <= q.order(); ++k) f[k] = g[k - 1];
  return f;
}

Series bk_generated_series(const Series& q) {
  const Series g = exp_series(integral_over_t(q));
  return integrate(g).truncated(q.order());
}

FunctionSpec build_identity(int order) {
  FunctionSpec f;
  f.name = "identity";
  f.series = Series::identity(order);
  f.pointwise = [](cdouble z) { return z; };
  f.pointwise_deriv = [](cdouble) { return cdouble(1.0); };
  f.pointwise_deriv2 = [](cdouble) { return cdouble(0.0); };
  f.normalized = true;
  return f;
}

FunctionSpec build_falpha(BoothParam p, int order) {
  p.require_pointwise();
  FunctionSpec f;
  f.name = "falpha";
  f.params["alpha"] = p.alpha;
  f.series = f_alpha_series(p, order);
  const double a = p.alpha;
  f.pointwise = [a](cdouble z) { return f_alpha_eval(z, {a}); };
  f.pointwise_deriv = [a](cdouble z) { return f_alpha_deriv(z, {a}); };
  f.pointwise_deriv2 = [a](cdouble z) {
    const cdouble den = 1.0 - a * z * z;
    return 2.0 * a * z * (3.0 + a * z * z) / (den * den * den);
  };
  f.normalized = true;
  return f;
}

FunctionSpec build_ftilde(BoothParam p, int order) {
  p.require_pointwise();
  FunctionSpec f;
  f.name = "ftilde";
  f.params["alpha"] = p.alpha;
  f.series = bs_generated_series(f_alpha_series(p, order));
  const double a = p.alpha;
  f.pointwise = [a](cdouble z) { return ftilde_closed(z, a); };
  f.pointwise_deriv = [a](cdouble z) { return ftilde_deriv_closed(z, a); };
  f.normalized = true;
  return f;
}

FunctionSpec build_L(BoothParam p, int order) {
  p.require_convex();
  FunctionSpec f = build_ftilde(p, order);
  // The literal integrand (1 + F_alpha(t))/t diverges at 0; it is read as z times
  // exp(int F_alpha(t)/t dt), which coincides with ftilde term by term.
  f.name = "L";
  return f;
}

FunctionSpec build_p_alpha(BoothParam p, int order, PAlphaExponent conv) {
  p.require_region();
  if (p.alpha <= 0.0) throw std::invalid_argument("P_alpha needs alpha in (0, 1)");
  FunctionSpec f;
  f.name = "palpha";
  f.params["alpha"] = p.alpha;
  f.params["proof_exponent"] = conv == PAlphaExponent::kProof ? 1.0 : 0.0;
  f.series = palpha_series(p.alpha, order, conv);
  const double a = p.alpha;
  const cdouble c = palpha_root(a, conv);
  f.pointwise = [a, c](cdouble z) {
    return 1.0 + cdouble(0.0, 2.0 / (kPi * (1.0 - a))) *
                     std::log((1.0 - c * z) / (1.0 - z));
  };
  return f;
}

FunctionSpec build_p_tilde(BoothParam p, int order, PAlphaExponent conv) {
  FunctionSpec pa = build_p_alpha(p, order, conv);
  FunctionSpec f;
  f.name = "ptilde";
  f.params = pa.params;
  Series s(order);
  for (int n = 1; n <= order; ++n) s[n] = pa.series[n] / static_cast<double>(n);
  f.series = std::move(s);
  return f;
}

FunctionSpec build_kuroki_owa(StripParams sp, int order) {
  sp.validate();
  FunctionSpec f;
  f.name = "kuroki";
  f.params["mu"] = sp.mu;
  f.params["beta"] = sp.beta;
  const double span = sp.beta - sp.mu;
  const cdouble root = std::polar(1.0, 2.0 * kPi * (1.0 - sp.mu) / span);
  Series s(order);
  s[0] = 1.0;
  cdouble rn = 1.0;
  for (int n = 1; n <= order; ++n) {
    rn *= root;
    s[n] = cdouble(0.0, span / (static_cast<double>(n) * kPi)) * (1.0 - rn);
  }
  f.series = std::move(s);
  f.pointwise = [span, root](cdouble z) {
    return 1.0 + cdouble(0.0, span / kPi) * std::log((1.0 - root * z) / (1.0 - z));
  };
  return f;
}

FunctionSpec build_sharpF(BoothParam p, int order, PAlphaExponent conv) {
  FunctionSpec pa = build_p_alpha(p, order, conv);
  Series q = pa.series;
  q[0] = 0.0;  // P_alpha - 1
  FunctionSpec f;
  f.name = "sharpF";
  f.params = pa.params;
  f.series = bs_generated_series(q);
  f.normalized = true;
  return f;
}

FunctionSpec build_fhat(BoothParam p, int order) {
  p.require_region();
  FunctionSpec f;
  f.name = "fhat";
  f.params["alpha"] = p.alpha;
  f.series = bk_generated_series(f_alpha_series(p, order));
  const double a = p.alpha;
  f.pointwise_deriv = [a](cdouble z) { return fhat_deriv_closed(z, a); };
  f.pointwise_deriv2 = [a](cdouble z) {
    if (std::abs(z) < 1e-12) return fhat_deriv_closed(z, a);
    return fhat_deriv_closed(z, a) / (1.0 - a * z * z);
  };
  f.normalized = true;
  return f;
}

FunctionSpec build_koebe(cdouble mu, int order) {
  FunctionSpec f;
  f.name = "koebe";
  f.params["mu_re"] = mu.real();
  f.params["mu_im"] = mu.imag();
  Series s(order);
  cdouble pw = 1.0;  // mu^{n-1}
  for (int n = 1; n <= order; ++n) {
    s[n] = static_cast<double>(n) * pw;
    pw *= mu;
  }
  f.series = std::move(s);
  f.pointwise = [mu](cdouble z) {
    const cdouble d = 1.0 - mu * z;
    return z / (d * d);
  };
  f.pointwise_deriv = [mu](cdouble z) {
    const cdouble d = 1.0 - mu * z;
    return (1.0 + mu * z) / (d * d * d);
  };
  f.pointwise_deriv2 = [mu](cdouble z) {
    const cdouble d = 1.0 - mu * z;
    return 2.0 * mu * (2.0 + mu * z) / (d * d * d * d);
  };
  f.normalized = true;
  return f;
}

FunctionSpec from_coefficients(std::vector<cdouble> coeffs, std::string name,
                               bool require_normalized) {
  FunctionSpec f;
  f.name = std::move(name);
  f.series = Series(std::move(coeffs));
  f.normalized = is_normalized(f.series);
  if (require_normalized && !f.normalized)
    throw std::invalid_argument("coefficient input must have c0=0, c1=1");
  return f;
}

FunctionSpec lookup_function(const std::string& key, int order) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = key.find(':', start);
    parts.push_back(key.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  auto num = [&](size_t i) {
    try {
      return std::stod(parts.at(i));
    } catch (const std::exception&) {
      throw UnknownFunctionKey(key);
    }
  };
  const std::string& head = parts[0];
  try {
    if (head == "identity" && parts.size() == 1) return build_identity(order);
    if (parts.size() == 2) {
      if (head == "falpha") return build_falpha({num(1)}, order);
      if (head == "ftilde") return build_ftilde({num(1)}, order);
      if (head == "L") return build_L({num(1)}, order);
      if (head == "koebe") return build_koebe(num(1), order);
      if (head == "fhat") return build_fhat({num(1)}, order);
      if (head == "sharpF") return build_sharpF({num(1)}, order);
      if (head == "palpha") return build_p_alpha({num(1)}, order);
      if (head == "ptilde") return build_p_tilde({num(1)}, order);
    }
    if (head == "kuroki" && parts.size() == 3)
      return build_kuroki_owa({num(1), num(2)}, order);
  } catch (const std::invalid_argument&) {
    throw;
  }
  throw UnknownFunctionKey(key);
}

}  // namespace booth
