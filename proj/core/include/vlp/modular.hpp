#pragma once

#include <string>

#include "vlp/interval.hpp"
#include "vlp/piecewise.hpp"
#include "vlp/quadrature.hpp"

namespace vlp {

struct ModularValue {
  IntegralOutcome outcome = IntegralOutcome::finite;
  double value = 0.0;  // +inf when divergent
  double error = 0.0;
  /// Every contributing piece was a constant raised to a constant power.
  bool exact = false;
  std::string note;
};

/// rho_p(f / scale) = integral of |f(t) / scale|^p(t).
ModularValue modular(const PiecewiseFunction& f, const ExponentFunction& p, double scale = 1.0,
                     const QuadratureOptions& options = {});

struct NormValue {
  double value = 0.0;  // equals r_hi
  double r_lo = 0.0;   // rho(f / r_lo) > 1 unless r_lo == 0
  double r_hi = 0.0;   // rho(f / r_hi) <= 1
  double tolerance = 0.0;
  bool exact = false;
};

/// inf{r > 0 : rho(f/r) <= 1} by bisection from r = 1 with caps 2^-60 and
/// 2^60. Throws NotInSpaceError beyond the upper cap and IndeterminateError
/// when the modular cannot be classified at some trial scale.
NormValue luxemburg_norm(const PiecewiseFunction& f, const ExponentFunction& p,
                         const QuadratureOptions& options = {});

/// Norm of the indicator of `set`.
NormValue char_norm(const IntervalSet& set, const ExponentFunction& p, const QuadratureOptions& options = {});

struct HolderPairing {
  IntegralOutcome outcome = IntegralOutcome::finite;
  double value = 0.0;  // integral of |f g|
  double norm_f = 0.0;
  double norm_g_conjugate = 0.0;
  double bound = 0.0;  // 4 ||f||_p ||g||_p'
};

/// Throws PreconditionError where p = 1 on a piece (no conjugate exponent).
HolderPairing holder_pairing(const PiecewiseFunction& f, const PiecewiseFunction& g, const ExponentFunction& p,
                             const QuadratureOptions& options = {});

}  // namespace vlp
