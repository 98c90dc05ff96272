#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlp/criteria.hpp"
#include "vlp/interval.hpp"
#include "vlp/nakano.hpp"
#include "vlp/piecewise.hpp"

namespace vlp {

/// L^{p(.)}, or L^inf when no exponent is given.
struct Space {
  std::optional<ExponentFunction> exponent;

  static Space infinity() { return {}; }
  static Space of(const ExponentFunction& p) { return {p}; }
  std::string name() const;
};

enum class WitnessKind { indicator, normalized };
std::string to_string(WitnessKind k);

struct WitnessElement {
  IntervalSet set;
  double source_norm = 0.0;
  double target_norm = 0.0;
};

/// Disjointly supported functions f_n. Indicator elements are chi_{set};
/// normalized elements are chi_{set} mu(set)^{-1/p(t)} for the exponent p
/// stored in `normalizer`, which have unit norm in L^{p(.)}.
struct WitnessSequence {
  WitnessKind kind = WitnessKind::indicator;
  IntervalDomain domain{0.0, 1.0};
  std::vector<WitnessElement> elements;
  std::optional<ExponentFunction> normalizer;

  // Level-set witness: beta < 1/a and the cut points t_1 > t_2 > ...
  double base = 0.0;
  double beta = 0.0;
  std::vector<double> cuts;
  // Band witness: offsets b - x_n and the sampled (b - x_n)^{g*(x_n)}.
  std::vector<double> offsets;
  std::vector<double> limit_values;
  // Infinite-measure blocks: branch 'a' (bounded tail) or 'b' (unbounded),
  // the per-block gap p+ - q-, and the levels n_k of the unbounded branch.
  char branch = 0;
  std::vector<double> gaps;
  std::vector<double> levels;
  std::optional<NakanoVerdict> nakano;

  /// f_n as a piecewise function on the domain.
  PiecewiseFunction function(std::size_t n) const;
  /// Exact pairwise disjointness of the supports.
  bool disjoint() const;
};

/// Sets E_n = F_n \ F_{n+1} from nested superlevel sets of r with
/// integral of a^r over each E_n equal to 1.5, so that the L^{r(.)} norm of
/// chi_{E_n} exceeds beta = 0.98/a. Needs a divergent integral of a^r.
WitnessSequence level_set_witness(const ExponentFunction& r, double a, std::size_t count,
                                  const LimitOptions& options = {});

/// Unit-norm functions s_n = chi_{B_n} mu(B_n)^{-1/p} on bands of
/// g = (p - q)/(pq) between g*(x_n) and g*((x_n + b)/2), where x_n are
/// sample points of a POSITIVE endpoint limit of g.
WitnessSequence dss_failure_witness(const ExponentFunction& p, const ExponentFunction& q, std::size_t count,
                                    const LimitOptions& options = {});

/// Disjoint unit-measure blocks on an infinite-measure domain on which p and
/// q nearly agree (bounded tail) or are sandwiched between increasing
/// integer levels (unbounded tail).
WitnessSequence infinite_measure_witness(const ExponentFunction& p, const ExponentFunction& q, std::size_t count,
                                         const GridOptions& grid = {});

struct SectionReport {
  std::vector<std::vector<double>> coefficients;
  std::vector<double> ratios;  // ||sum c_n f_n||_source / ||sum c_n f_n||_target
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread() const { return max_ratio / min_ratio; }
};

/// Compares the two norms on the span of the witness over one-hot,
/// geometric and random unit-sphere coefficient vectors.
SectionReport section_equivalence_check(const WitnessSequence& w, const Space& source, const Space& target,
                                        std::size_t trials = 100, std::uint64_t seed = 1);

}  // namespace vlp
