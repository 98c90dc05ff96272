#include <doctest.h>

#include "suites.hpp"

// Each suite draws its own generated fixtures; a failure lists the first few.
#define SUITE_CASE(name)            \
  TEST_CASE(#name) {                \
    const auto r = suites::name();  \
    INFO(suites::describe(r));      \
    CHECK(r.ok());                  \
  }

SUITE_CASE(exponent_invariants)
SUITE_CASE(layer_cake)
SUITE_CASE(equimeasurability)
SUITE_CASE(reciprocal_rearrangement)
SUITE_CASE(increasing_reflection)
SUITE_CASE(rearrangement_nonincreasing)
SUITE_CASE(exponential_commutation)
SUITE_CASE(unit_ball)
SUITE_CASE(homogeneity)
SUITE_CASE(constant_exponent)
SUITE_CASE(holder_bound)
SUITE_CASE(lattice_monotonicity)
SUITE_CASE(decay_gives_finite_integral)
SUITE_CASE(divergent_integral_blocks_dss)
SUITE_CASE(route_coherence)
SUITE_CASE(rearrangement_keeps_log_holder)
SUITE_CASE(gap_decides_limit)
