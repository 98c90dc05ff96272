#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "vlp/criteria.hpp"

namespace vlp {

/// Exponent sequence, indexed from n = 1.
using ExponentSequence = std::function<double(std::size_t)>;

struct NakanoVerdict {
  Tri equivalent = Tri::indeterminate;
  /// For an equivalent verdict, the largest alpha = 2^-k found to make
  /// sum alpha^{e_n} converge, with e_n = p_n q_n / |p_n - q_n|.
  double alpha = 0.0;
  /// Least-squares slopes of e_n against ln(n + 1) on [H^1/4, H^1/2] and
  /// [H^1/2, H] for horizon H.
  double slope_early = 0.0;
  double slope_late = 0.0;
  double max_early = 0.0;
  double max_late = 0.0;
  /// Smallest e_n with p_n != q_n on each window.
  double min_early = 0.0;
  double min_late = 0.0;
  std::string criterion;
};

/// Decides whether l^{p_n} and l^{q_n} coincide with equivalent norms:
/// some alpha in (0,1) with sum alpha^{p_n q_n / |p_n - q_n|} finite. Terms
/// with p_n = q_n contribute 0.
NakanoVerdict nakano_equivalent(const ExponentSequence& p, const ExponentSequence& q, std::size_t horizon = 1000000);

}  // namespace vlp
