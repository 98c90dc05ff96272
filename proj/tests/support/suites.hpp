#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Checks shared by the doctest executables and the acceptance binary. Each
// suite runs its fixtures to completion and collects failures.
namespace suites {

struct Result {
  std::string name;
  std::size_t fixtures = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  std::string summary;                // suite-specific detail for the report line
  double seconds = 0.0;

  bool ok() const { return failures == 0 && fixtures > 0; }
  void fail(std::string message);
};

std::string describe(const Result& r);

// Invariant suites (at least 100 generated fixtures each).
Result exponent_invariants();
Result layer_cake();
Result equimeasurability();
Result reciprocal_rearrangement();
Result increasing_reflection();
Result rearrangement_nonincreasing();
Result exponential_commutation();
Result unit_ball();
Result homogeneity();
Result constant_exponent();
Result holder_bound();
Result lattice_monotonicity();
Result decay_gives_finite_integral();
Result divergent_integral_blocks_dss();
Result route_coherence();
Result rearrangement_keeps_log_holder();
Result gap_decides_limit();

std::vector<Result> all_invariants();

// Witness validation on every fixture whose expected answer is negative,
// plus the two infinite-measure constructions.
Result witnesses(std::size_t count = 8, std::size_t trials = 100);

// Nakano verdicts against the brute-force partial sums.
Result nakano_agreement();

// Oscillating fixtures with known answers; any decisive wrong verdict fails.
Result adversarial();

}  // namespace suites
