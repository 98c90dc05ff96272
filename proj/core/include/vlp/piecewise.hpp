#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vlp/expr.hpp"
#include "vlp/interval.hpp"

namespace vlp {

enum class Monotonicity { increasing, decreasing, constant, unknown };

std::string to_string(Monotonicity m);

struct Piece {
  Interval span;
  Expr expr;
  Monotonicity monotone = Monotonicity::unknown;
  /// Monotonicity was read off a dense sample rather than declared or
  /// propagated by an algebraic rule.
  bool inferred = false;

  double operator()(double t) const noexcept { return expr(t); }
};

/// Sampling controls shared by every grid-based estimate.
struct GridOptions {
  std::size_t points_per_piece = 10000;
};

/// Dense sample of a span: uniform core plus geometric refinement towards
/// both endpoints. `weight[i]` is the measure of the cell owning `t[i]`; the
/// weights sum to the span length (infinite for unbounded spans).
struct Grid {
  std::vector<double> t;
  std::vector<double> weight;
};

Grid make_grid(const Interval& span, std::size_t points);

/// One-sided limit of `e` at an endpoint of `span`, approached from inside.
/// Returns +-infinity for detected poles.
double one_sided_limit(const Expr& e, const Interval& span, bool at_lo);

/// Real function on an interval domain given by closed-form pieces whose
/// interiors are disjoint and cover the domain.
class PiecewiseFunction {
 public:
  PiecewiseFunction(IntervalDomain domain, std::vector<Piece> pieces, std::string name = "f");

  /// Single piece spanning the whole domain.
  static PiecewiseFunction single(IntervalDomain domain, Expr expr, Monotonicity m,
                                  std::string name = "f");
  /// Step function: `values[i]` on `spans[i]`; spans must tile the domain.
  static PiecewiseFunction steps(IntervalDomain domain, const std::vector<Interval>& spans,
                                 const std::vector<double>& values, std::string name = "f");

  const IntervalDomain& domain() const noexcept { return domain_; }
  std::span<const Piece> pieces() const noexcept { return pieces_; }
  const std::string& name() const noexcept { return name_; }

  /// Value at an interior point. Throws DomainError outside the domain.
  double operator()(double t) const;
  const Piece& piece_at(double t) const;

  bool all_monotone() const noexcept;
  bool is_step() const noexcept;

  PiecewiseFunction renamed(std::string name) const;

 private:
  IntervalDomain domain_;
  std::vector<Piece> pieces_;
  std::string name_;
};

/// Exponent p with 1 <= p(t) < infinity, checked on the sampling grid.
class ExponentFunction {
 public:
  explicit ExponentFunction(PiecewiseFunction f, const GridOptions& grid = {});

  static ExponentFunction constant(IntervalDomain domain, double value, std::string name = "p");

  const PiecewiseFunction& function() const noexcept { return f_; }
  operator const PiecewiseFunction&() const noexcept { return f_; }
  const IntervalDomain& domain() const noexcept { return f_.domain(); }
  const std::string& name() const noexcept { return f_.name(); }
  double operator()(double t) const { return f_(t); }

 private:
  PiecewiseFunction f_;
};

struct EssBounds {
  double ess_inf = 0.0;
  double ess_sup = 0.0;
  std::optional<Interval> subset;
  /// False when some overlapping piece has unknown monotonicity and the
  /// bounds are grid extrema.
  bool exact = true;
};

EssBounds ess_bounds(const PiecewiseFunction& f, std::optional<Interval> subset = std::nullopt,
                     const GridOptions& grid = {});

struct ComparisonReport {
  bool q_le_p = false;
  /// Estimated measure of {p = q}; infinite on unbounded domains when the
  /// exponents agree along the tail.
  double equality_measure = 0.0;
  /// Smallest sampled value of p - q.
  double min_gap = 0.0;
};

ComparisonReport pointwise_compare(const ExponentFunction& p, const ExponentFunction& q,
                                   const GridOptions& grid = {});

enum class DerivedKind {
  conjugate,                // p / (p - 1)
  difference_over_product,  // (p - q) / (p q)
  product_over_difference,  // p q / (p - q)
  relative_gap,             // (p - q) / p
  reciprocal,               // 1 / p
  right_gap,                // (p - 1) / p
  difference,               // p - q
};

std::string to_string(DerivedKind k);
bool needs_second_argument(DerivedKind k);

/// Derived function on the common refinement of the input pieces. Monotonicity
/// is propagated by algebraic rules; when a rule is inconclusive but every
/// input piece has declared monotonicity, the result is split at sampled
/// turning points and marked `inferred`.
PiecewiseFunction combine(const PiecewiseFunction& p, const PiecewiseFunction* q, DerivedKind kind,
                          const GridOptions& grid = {});

/// Monotone sub-pieces of `e` on `span` found by sampling, or a single
/// unknown piece when the sample shows too many turning points.
std::vector<Piece> infer_monotone_pieces(const Expr& e, const Interval& span,
                                         const GridOptions& grid = {});

}  // namespace vlp

namespace vlp {

/// `height` on `set`, 0 elsewhere in `domain`.
PiecewiseFunction indicator(const IntervalDomain& domain, const IntervalSet& set, double height = 1.0,
                            std::string name = "chi");

/// c * f. Monotonicity flips for negative c.
PiecewiseFunction scaled(const PiecewiseFunction& f, double c);

}  // namespace vlp
