#include <doctest.h>

#include <cmath>

#include "vlp/error.hpp"
#include "vlp/piecewise.hpp"
#include "vlp/spec_format.hpp"

using namespace vlp;

namespace {
ExponentFunction exp_of(const char* spec) { return parse_exponent_spec(spec); }
}  // namespace

TEST_CASE("parsed exponents evaluate to their closed forms") {
  const auto two = exp_of("p(t)=2 on (0,1)");
  CHECK(two(0.3) == 2.0);
  CHECK(two.function().is_step());

  CHECK(exp_of("p(t)=1/t^0.5 on (0,1)")(0.25) == doctest::Approx(2.0));
  CHECK(exp_of("p(t)=1+ln(1-ln t) on (0,1)")(std::exp(-1.0)) == doctest::Approx(1.0 + std::log(2.0)));
  CHECK(exp_of("p(t)=3 on (0,1)")(0.5) == 3.0);
  CHECK(exp_of("p(t)=t^-1 on (0,1)")(0.1) == doctest::Approx(10.0));
  CHECK(exp_of("p(t)=ln(1/t)^2 on (0, exp(-1))")(std::exp(-2.0)) == doctest::Approx(4.0));
}

TEST_CASE("essential bounds come from piece endpoints") {
  auto b = ess_bounds(exp_of("p(t)=2 on (0,1)"));
  CHECK(b.ess_inf == 2.0);
  CHECK(b.ess_sup == 2.0);

  b = ess_bounds(exp_of("p(t)=1/t on (0,1) dec"));
  CHECK(b.exact);
  CHECK(b.ess_inf == doctest::Approx(1.0));
  CHECK(std::isinf(b.ess_sup));

  // Without a monotonicity tag the bounds are sampled and flagged.
  b = ess_bounds(exp_of("p(t)=1/t on (0,1)"));
  CHECK_FALSE(b.exact);
  CHECK(b.ess_sup > 1e6);

  b = ess_bounds(exp_of("p(t)=2+t on (0,1) inc"), Interval{0.0, 0.5});
  CHECK(b.ess_inf == doctest::Approx(2.0));
  CHECK(b.ess_sup == doctest::Approx(2.5));
}

TEST_CASE("pointwise comparison reports the equality set") {
  auto c = pointwise_compare(exp_of("p(t)=3 on (0,1)"), exp_of("q(t)=2 on (0,1)"));
  CHECK(c.q_le_p);
  CHECK(c.equality_measure == 0.0);
  CHECK(c.min_gap == doctest::Approx(1.0));

  c = pointwise_compare(exp_of("p(t)=2 on (0,1)"), exp_of("q(t)=2 on (0,1)"));
  CHECK(c.q_le_p);
  CHECK(c.equality_measure == doctest::Approx(1.0));

  c = pointwise_compare(exp_of("p(t)=2/t on (0,1) dec"), exp_of("q(t)=1/t on (0,1) dec"));
  CHECK(c.q_le_p);
  CHECK(c.equality_measure == 0.0);

  c = pointwise_compare(exp_of("p(t)=2 on (0,1)"), exp_of("q(t)=3 on (0,1)"));
  CHECK_FALSE(c.q_le_p);
}

TEST_CASE("derived exponents") {
  const auto four = exp_of("p(t)=4 on (0,1)");
  const auto conj = combine(four, nullptr, DerivedKind::conjugate);
  CHECK(conj(0.5) == doctest::Approx(4.0 / 3.0));

  for (double eps : {0.25, 1.0, 3.0}) {
    CAPTURE(eps);
    const auto p = parse_exponent_spec("p(t)=(1+eps)/t on (0,1) dec", {{"eps", eps}});
    const auto q = exp_of("q(t)=1/t on (0,1) dec");
    const auto g = combine(p, &q.function(), DerivedKind::difference_over_product);
    for (double t : {1e-6, 0.01, 0.3, 0.77, 0.999}) CHECK(g(t) == doctest::Approx(eps * t / (1.0 + eps)));
    for (const auto& piece : g.pieces()) CHECK(piece.monotone == Monotonicity::increasing);
  }

  const auto three = exp_of("p(t)=3 on (0,1)");
  const auto two = exp_of("q(t)=2 on (0,1)");
  const auto pod = combine(three, &two.function(), DerivedKind::product_over_difference);
  CHECK(pod(0.1) == doctest::Approx(6.0));
  CHECK(pod(0.9) == doctest::Approx(6.0));
}

TEST_CASE("malformed or out-of-range input is rejected") {
  CHECK_THROWS_AS(exp_of("p(t)=2 on (0,1"), SyntaxError);
  CHECK_THROWS_AS(exp_of("p(t)=2 +* t on (0,1)"), SyntaxError);
  CHECK_THROWS_AS(exp_of("p(t)=2 on (1,0)"), DomainError);
  CHECK_THROWS_AS(exp_of("p(t)=0.5 on (0,1)"), RangeError);
  const auto three = exp_of("p(t)=3 on (0,1)");
  CHECK_THROWS_AS(combine(three, nullptr, DerivedKind::difference), PreconditionError);
}
