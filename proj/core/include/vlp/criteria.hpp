#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlp/piecewise.hpp"
#include "vlp/quadrature.hpp"
#include "vlp/rearrangement.hpp"

namespace vlp {

enum class LimitOutcome { zero, positive, indeterminate };
std::string to_string(LimitOutcome o);

/// One sample of the endpoint limit: x = b - offset, g_star = g*(x) and
/// log_value = g*(x) ln(b - x), the logarithm of (b - x)^{g*(x)}.
struct LimitSample {
  double offset;
  double x;
  double g_star;
  double log_value;
};

struct LimitVerdict {
  LimitOutcome outcome = LimitOutcome::indeterminate;
  double limit = 0.0;  // estimate of lim (b - x)^{g*(x)} when positive
  double slope = 0.0;  // log-log growth rate of -log_value over the tail
  RearrangeMode mode = RearrangeMode::numeric;
  std::vector<LimitSample> evidence;
  std::string note;
};

struct LimitOptions {
  GridOptions grid;
  /// Deepest sample index K (offsets b 2^-k, k = 4..K). 0 picks 120 for an
  /// exact single-piece rearrangement and 48 otherwise.
  int depth = 0;
  /// Threshold tau: a decay of (b - x)^{g*} below tau counts as reaching 0.
  double tol = 1e-6;
};

/// Decides lim_{x -> b-} (b - x)^{g*(x)} for g >= 0 on a finite domain.
LimitVerdict endpoint_limit(const PiecewiseFunction& g, const LimitOptions& options = {});

/// lim_{x -> 0} (integral_0^x p*) / (x ln(e/x)). Evidence rows carry
/// offset = x = b 2^-k, g_star = the integral and log_value = the ratio.
LimitVerdict marcinkiewicz_limit(const PiecewiseFunction& p, const LimitOptions& options = {});

struct ExpIntegral {
  double base = 0.0;
  IntegralResult result;
};

/// integral over the domain of a^{r(t)}; equal to integral_0^b a^{r*(x)} dx.
ExpIntegral exp_integral(const PiecewiseFunction& r, double a, const QuadratureOptions& options = {});

/// Sampled sup of |f(x) - f(y)| ln(e + 1/|x - y|); +inf for unbounded f or
/// when the estimate keeps growing under refinement.
double log_holder_constant(const PiecewiseFunction& f, const GridOptions& grid = {});

enum class Tri { yes, no, indeterminate, not_applicable };
std::string to_string(Tri t);

struct Verdict {
  Tri value = Tri::indeterminate;
  /// The condition that decided the verdict, named by what it checks.
  std::string criterion;
};

struct EmbeddingVerdict {
  Tri holds = Tri::indeterminate;
  std::string criterion;
  ComparisonReport comparison;
  double lambda = 0.0;  // witness lambda for unbounded domains
  std::vector<std::pair<double, IntegralResult>> lambda_scan;
};

EmbeddingVerdict embedding_holds(const ExponentFunction& p, const ExponentFunction& q,
                                 const GridOptions& grid = {});

struct NamedLimit {
  std::string label;  // e.g. "(p-q)/(pq)"
  LimitVerdict verdict;
};

struct ClassificationReport {
  enum class Kind { pair, left_infinity, right_l1 } kind = Kind::pair;
  std::string source;  // e.g. "L^p", "L^inf"
  std::string target;
  Verdict embedding;
  Verdict dss;
  Verdict l_weakly_compact;
  Verdict m_weakly_compact;
  Verdict weakly_compact;
  Verdict strictly_singular;
  double equality_measure = 0.0;
  std::vector<NamedLimit> limits;
  std::vector<ExpIntegral> integrals;
  std::optional<double> log_holder_p;
  std::optional<double> log_holder_q;
  std::optional<double> gap_ess_inf;
  std::vector<std::string> notes;
  double domain_measure = 0.0;

  /// DSS for pairs, weak compactness for the L^1 target, strict
  /// singularity for the L^inf source.
  const Verdict& headline() const;
  const LimitVerdict* limit(const std::string& label) const;
};

ClassificationReport classify_pair(const ExponentFunction& p, const ExponentFunction& q,
                                   const LimitOptions& options = {});
ClassificationReport classify_left_infty(const ExponentFunction& p, const LimitOptions& options = {});
ClassificationReport classify_right_l1(const ExponentFunction& p, const LimitOptions& options = {});

}  // namespace vlp
