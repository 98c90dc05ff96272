#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vlp/piecewise.hpp"

namespace vlp {

/// mu_f(s) = |{t : f(t) > s}| for f >= 0. Exact level crossings on monotone
/// pieces, cell counting on the sampling grid for unknown pieces. May be
/// infinite on unbounded domains.
double distribution(const PiecewiseFunction& f, double s, const GridOptions& grid = {});

enum class RearrangeMode {
  exact,               // single monotone piece or step function
  monotone_inversion,  // bisection on the distribution built from level crossings
  numeric,             // sorted grid cells
};

std::string to_string(RearrangeMode m);

struct RearrangeOptions {
  GridOptions grid;
  /// Use a slower mode than the structure allows (never a faster one).
  std::optional<RearrangeMode> force_mode;
};

/// Decreasing rearrangement f* on [0, b), b = |domain|.
class RearrangedFunction {
 public:
  double operator()(double x) const;
  /// f*(b - d), computed from the offset d so that tiny d is not lost to
  /// cancellation.
  double at_end_offset(double d) const;
  /// Integral of f* over [0, x].
  double integral_to(double x) const;

  double measure() const noexcept { return measure_; }
  RearrangeMode mode() const noexcept { return mode_; }
  bool exact() const noexcept { return mode_ == RearrangeMode::exact; }
  const PiecewiseFunction& source() const noexcept { return source_; }
  /// Smallest end offset the representation resolves (0 when unlimited).
  double end_resolution() const noexcept;
  /// f* as a function on (0, b) when the mode is exact.
  std::optional<PiecewiseFunction> closed_form() const;

  /// "x,f*(x)" rows at up to `points` abscissae with geometric refinement near 0
  /// and b.
  std::string to_csv(std::size_t points) const;

  struct Impl;

 private:
  friend RearrangedFunction rearrange(const PiecewiseFunction&, const RearrangeOptions&);
  RearrangedFunction(PiecewiseFunction source, RearrangeMode mode, std::shared_ptr<const Impl> impl);

  PiecewiseFunction source_;
  RearrangeMode mode_;
  double measure_;
  std::shared_ptr<const Impl> impl_;
};

/// Throws PreconditionError on infinite measure, RangeError when f takes
/// negative values.
RearrangedFunction rearrange(const PiecewiseFunction& f, const RearrangeOptions& options = {});

}  // namespace vlp
