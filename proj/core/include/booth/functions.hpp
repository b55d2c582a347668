#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "booth/region.hpp"
#include "booth/series.hpp"

namespace booth {

/// Strip domain parameters of the Kuroki-Owa mapping (mu < 1 < beta).
struct StripParams {
  double mu = -1.0;
  double beta = 2.0;
  void validate() const {
    if (!(mu < 1.0 && 1.0 < beta))
      throw std::invalid_argument("strip parameters need mu < 1 < beta");
  }
};

/// A named analytic function: truncated series plus optional closed-form
/// evaluators for the function and its first two derivatives. Immutable
/// after construction.
struct FunctionSpec {
  std::string name;
  Series series{0};
  std::function<cdouble(cdouble)> pointwise;         // f(z)
  std::function<cdouble(cdouble)> pointwise_deriv;   // f'(z)
  std::function<cdouble(cdouble)> pointwise_deriv2;  // f''(z)
  std::map<std::string, double> params;
  bool normalized = false;
};

inline constexpr int kDefaultOrder = 64;

/// Exponent convention for P_alpha. The stated definition carries
/// exp(pi i (1-alpha)^2); the Kuroki-Owa substitution mu = 1/(alpha-1),
/// beta = 1/(1-alpha) and the energy-bound computation both give
/// exp(pi i (2-alpha)). Both are available; kProof is the default.
enum class PAlphaExponent { kStated, kProof };

// Series pipeline shared by the BS/BK generators: q must have c0 = 0.
Series bs_generated_series(const Series& q);  // z exp(int q/t)
Series bk_generated_series(const Series& q);  // int exp(int q/t)

FunctionSpec build_identity(int order = kDefaultOrder);
FunctionSpec build_falpha(BoothParam p, int order = kDefaultOrder);
FunctionSpec build_ftilde(BoothParam p, int order = kDefaultOrder);
FunctionSpec build_L(BoothParam p, int order = kDefaultOrder);
FunctionSpec build_p_alpha(BoothParam p, int order = kDefaultOrder,
                           PAlphaExponent conv = PAlphaExponent::kProof);
FunctionSpec build_p_tilde(BoothParam p, int order = kDefaultOrder,
                           PAlphaExponent conv = PAlphaExponent::kProof);
FunctionSpec build_kuroki_owa(StripParams s, int order = kDefaultOrder);
FunctionSpec build_sharpF(BoothParam p, int order = kDefaultOrder,
                          PAlphaExponent conv = PAlphaExponent::kProof);
FunctionSpec build_fhat(BoothParam p, int order = kDefaultOrder);
FunctionSpec build_koebe(cdouble mu, int order = kDefaultOrder);

/// Wrap raw coefficients (index = power) as a FunctionSpec.
FunctionSpec from_coefficients(std::vector<cdouble> coeffs, std::string name,
                               bool require_normalized = false);

struct UnknownFunctionKey : std::runtime_error {
  explicit UnknownFunctionKey(const std::string& key)
      : std::runtime_error("unknown function key: " + key) {}
};

/// Registry lookup by key: "identity", "falpha:A", "ftilde:A", "L:A",
/// "koebe:MU", "fhat:A", "sharpF:A", "palpha:A", "ptilde:A",
/// "kuroki:MU:BETA".
FunctionSpec lookup_function(const std::string& key, int order = kDefaultOrder);

}  // namespace booth
