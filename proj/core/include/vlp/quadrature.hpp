#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vlp/interval.hpp"

namespace vlp {

enum class IntegralOutcome { finite, divergent, indeterminate };

std::string to_string(IntegralOutcome o);

struct QuadratureOptions {
  double rel_tol = 1e-10;
  /// Running sum that must be exceeded before divergence can be declared.
  double divergence_threshold = 1e12;
  /// Number of consecutive tail panels that must each grow by `growth_factor`.
  int growth_panels = 8;
  double growth_factor = 1.05;
  /// Minimum ratio between the recent log growth rate and the rate at half
  /// the panel index. Decelerating growth is not taken as divergence.
  double sustained_growth = 0.9;
  /// Panels whose error estimate exceeds this fraction of their value are
  /// unresolved; no verdict rests on them.
  double panel_tol = 1e-3;
};

struct TailPanel {
  double offset;   // distance of the panel's inner edge from the endpoint (or its left edge at infinity)
  double value;    // panel contribution
  double running;  // running sum of this end's panels
};

struct IntegralResult {
  IntegralOutcome outcome = IntegralOutcome::indeterminate;
  double value = 0.0;  // meaningful when finite
  double error = 0.0;
  std::vector<TailPanel> lo_trace;
  std::vector<TailPanel> hi_trace;
  std::string note;
};

/// Integral of a nonnegative integrand over `span` (hi may be infinite) by
/// adaptive Gauss-Kronrod on panels that shrink geometrically towards each
/// endpoint. Classifies the result as finite, divergent or indeterminate.
IntegralResult integrate(const std::function<double(double)>& f, const Interval& span,
                         const QuadratureOptions& options = {});

/// Adaptive Gauss-Kronrod 7/15 on a proper interval. Returns the value and
/// writes the error estimate.
double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double* error = nullptr, int max_intervals = 200);

}  // namespace vlp
