#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vlp/error.hpp"
#include "vlp/modular.hpp"
#include "vlp/spec_format.hpp"
#include "vlp/witness.hpp"

using namespace vlp;

namespace {
ExponentFunction ex(const char* spec) { return parse_exponent_spec(spec); }

// Every element re-measured by char_norm, independently of the constructor.
void check_level_sets(const WitnessSequence& w, const ExponentFunction& r, double a, std::size_t count) {
  REQUIRE(w.elements.size() == count);
  CHECK(w.kind == WitnessKind::indicator);
  CHECK(w.disjoint());
  CHECK(w.beta == doctest::Approx(0.98 / a));
  for (const auto& e : w.elements) {
    CHECK(e.set.measure() > 0.0);
    CHECK(char_norm(e.set, r).value >= w.beta);
  }
  // Sets march toward the left endpoint.
  for (std::size_t n = 1; n < count; ++n)
    CHECK(w.elements[n].set.parts().back().hi <= w.elements[n - 1].set.parts().front().lo + 1e-15);
}
}  // namespace

TEST_CASE("level-set witness for a divergent integral") {
  const auto r = ex("r(t)=1/t on (0,1) dec");
  const auto w = level_set_witness(r, 2.0, 5);
  check_level_sets(w, r, 2.0, 5);
  CHECK(w.beta == doctest::Approx(0.49));

  const auto log = ex("r(t)=ln(1/t) on (0, exp(-1)) dec");
  const auto v = level_set_witness(log, std::exp(2.0), 3);
  check_level_sets(v, log, std::exp(2.0), 3);
  // e^{2 ln(1/t)} = t^-2 is not integrable at 0.
  CHECK(oracle::integrate([](double t) { return 1.0 / (t * t); }, 1e-12, std::exp(-1.0)) > 1e11);
}

TEST_CASE("level-set witness preconditions") {
  CHECK_THROWS_AS(level_set_witness(ex("r(t)=2 on (0,1)"), 2.0, 3), PreconditionError);
  CHECK_THROWS_AS(level_set_witness(ex("r(t)=1/t on (0,1) dec"), 1.0, 3), PreconditionError);
  CHECK_THROWS_AS(level_set_witness(ex("r(t)=1/t on (0,1)"), 2.0, 3), PreconditionError);
}

TEST_CASE("band witness for a non-DSS pair") {
  const auto p = ex("p(t)=2/t on (0,1) dec");
  const auto q = ex("q(t)=1/t on (0,1) dec");
  const auto w = dss_failure_witness(p, q, 4);
  REQUIRE(w.elements.size() == 4);
  CHECK(w.kind == WitnessKind::normalized);
  CHECK(w.disjoint());
  for (const auto& e : w.elements) {
    CHECK(e.source_norm == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(luxemburg_norm(w.function(&e - w.elements.data()), p).value == doctest::Approx(1.0).epsilon(1e-6));
  }
  // Bands follow the smallest values of g(t) = t/2, toward t = 0.
  for (std::size_t n = 1; n < 4; ++n)
    CHECK(w.elements[n].set.parts().back().hi <= w.elements[n - 1].set.parts().front().lo + 1e-15);
  CHECK(w.elements[0].set.parts().back().hi < 0.5);

  const auto root = dss_failure_witness(ex("p(t)=2/t^0.5 on (0,1) dec"), ex("q(t)=1/t^0.5 on (0,1) dec"), 3);
  CHECK(root.elements.size() == 3);
  CHECK(root.disjoint());

  CHECK_THROWS_AS(dss_failure_witness(ex("p(t)=3 on (0,1)"), ex("q(t)=2 on (0,1)"), 3), PreconditionError);
}

TEST_CASE("unit blocks on infinite measure") {
  auto w = infinite_measure_witness(ex("p(t)=2+1/(1+t) on (0,inf) dec"), ex("q(t)=2 on (0,inf)"), 4);
  CHECK(w.branch == 'a');
  REQUIRE(w.elements.size() == 4);
  REQUIRE(w.gaps.size() == 4);
  CHECK(w.disjoint());
  for (std::size_t n = 0; n < 4; ++n) {
    const auto& set = w.elements[n].set;
    CHECK(set.measure() == doctest::Approx(1.0));
    // 1/(1+t) < 1/(2(n+1)) on the block, so the exponent gap is at most 1/(n+1).
    CHECK(set.parts().front().lo >= 2.0 * (n + 1) - 1.0 - 1e-9);
    CHECK(w.gaps[n] <= 1.0 / (n + 1) + 1e-12);
  }

  w = infinite_measure_witness(ex("p(t)=t+exp(-t) on (1,inf) inc"), ex("q(t)=t on (1,inf) inc"), 3);
  CHECK(w.branch == 'b');
  CHECK(w.elements.size() == 3);
  CHECK(w.disjoint());
  REQUIRE(w.levels.size() >= 3);
  for (std::size_t k = 1; k < w.levels.size(); ++k) CHECK(w.levels[k] > w.levels[k - 1]);

  CHECK_THROWS_AS(infinite_measure_witness(ex("p(t)=3 on (0,inf)"), ex("q(t)=2 on (0,inf)"), 3), PreconditionError);
  CHECK_THROWS_AS(infinite_measure_witness(ex("p(t)=3 on (0,1)"), ex("q(t)=2 on (0,1)"), 3), PreconditionError);
}

TEST_CASE("section check") {
  const auto p = ex("p(t)=2/t on (0,1) dec");
  const auto q = ex("q(t)=1/t on (0,1) dec");
  const auto w = dss_failure_witness(p, q, 6);
  const auto s = section_equivalence_check(w, Space::of(p), Space::of(q), 100);
  CHECK(s.ratios.size() == 100);
  CHECK(s.spread() < 50.0);

  const auto one = dss_failure_witness(p, q, 1);
  const auto single = section_equivalence_check(one, Space::of(p), Space::of(q), 20);
  CHECK(single.spread() == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(section_equivalence_check(w, Space::of(ex("p(t)=2 on (0,2)")), Space::of(q)), DomainError);
}

TEST_CASE("a DSS pair has no bounded section") {
  // Dyadic sets toward 0: one-hot ratios are |E|^{1/3 - 1/2}, unbounded in n.
  const auto p = ex("p(t)=3 on (0,1)");
  const auto q = ex("q(t)=2 on (0,1)");
  auto spread = [&](std::size_t count) {
    WitnessSequence w;
    w.domain = p.domain();
    for (std::size_t n = 0; n < count; ++n) {
      const double hi = std::ldexp(1.0, -static_cast<int>(2 * n));
      w.elements.push_back({IntervalSet{{hi / 2, hi}}, 0.0, 0.0});
    }
    return section_equivalence_check(w, Space::of(p), Space::of(q), count).spread();
  };
  const double s2 = spread(2), s4 = spread(4), s8 = spread(8);
  CHECK(s2 == doctest::Approx(std::pow(4.0, 1.0 / 6.0)).epsilon(1e-6));
  CHECK(s4 > s2);
  CHECK(s8 > s4);
  CHECK(s8 == doctest::Approx(std::pow(4.0, 7.0 / 6.0)).epsilon(1e-6));
}
