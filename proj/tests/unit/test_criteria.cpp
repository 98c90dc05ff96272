#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vlp/criteria.hpp"
#include "vlp/spec_format.hpp"

using namespace vlp;

namespace {
ExponentFunction ex(const char* spec) { return parse_exponent_spec(spec); }

PiecewiseFunction gap(const char* p, const char* q) {
  const auto P = ex(p);
  const auto Q = ex(q);
  return combine(P, &Q.function(), DerivedKind::difference_over_product);
}

const char* kSqrtLog = "q(t)=sqrt(ln(1/t)) on (0, exp(-1)) dec";
const char* kSqrtLog2 = "p(t)=2*sqrt(ln(1/t)) on (0, exp(-1)) dec";
}  // namespace

TEST_CASE("endpoint limit") {
  auto v = endpoint_limit(parse_function_spec("g(t)=0.5 on (0,1)"));
  CHECK(v.outcome == LimitOutcome::zero);
  CHECK_FALSE(v.evidence.empty());

  v = endpoint_limit(gap("p(t)=2/t on (0,1) dec", "q(t)=1/t on (0,1) dec"));
  CHECK(v.outcome == LimitOutcome::positive);
  CHECK(v.limit == doctest::Approx(1.0).epsilon(1e-3));
  // Oracle: exp(g*(x) ln(b - x)) with g*(x) = (1 - x)/2.
  for (const auto& s : v.evidence) CHECK(s.log_value == doctest::Approx(s.offset / 2 * std::log(s.offset)).epsilon(1e-6));

  v = endpoint_limit(gap(kSqrtLog2, kSqrtLog));
  CHECK(v.outcome == LimitOutcome::zero);
  REQUIRE(v.evidence.size() >= 8);
  // g*(x) = 1/(2 sqrt(ln(1/(b - x)))), so L = -sqrt(ln(1/(b - x)))/2 falls
  // without bound but never reaches ln(1e-6) at representable offsets.
  for (const auto& s : v.evidence) CHECK(s.log_value == doctest::Approx(-std::sqrt(std::log(1.0 / s.offset)) / 2).epsilon(1e-6));
  CHECK(v.slope >= 0.05);
}

TEST_CASE("Marcinkiewicz ratio") {
  CHECK(marcinkiewicz_limit(ex("p(t)=2 on (0,1)")).outcome == LimitOutcome::zero);
  CHECK(marcinkiewicz_limit(ex("p(t)=ln(1/t) on (0, exp(-1)) dec")).outcome == LimitOutcome::positive);
  CHECK(marcinkiewicz_limit(ex("p(t)=sqrt(ln(1/t)) on (0, exp(-1)) dec")).outcome == LimitOutcome::zero);
}

TEST_CASE("integral of a power of the base") {
  auto i = exp_integral(parse_function_spec("r(t)=3 on (0,1)"), 2.0);
  CHECK(i.result.outcome == IntegralOutcome::finite);
  CHECK(i.result.value == doctest::Approx(8.0));

  i = exp_integral(parse_function_spec("r(t)=1/t on (0,1) dec"), 2.0);
  CHECK(i.result.outcome == IntegralOutcome::divergent);

  const double e = std::exp(1.0);
  i = exp_integral(parse_function_spec("r(t)=1+ln(1-ln t) on (0,1) dec"), e);
  CHECK(i.result.outcome == IntegralOutcome::finite);
  CHECK(i.result.value == doctest::Approx(2.0 * e).epsilon(1e-8));
  const double ref = oracle::integrate([e](double t) { return std::pow(e, 1.0 + std::log(1.0 - std::log(t))); }, 0.0, 1.0);
  CHECK(i.result.value == doctest::Approx(ref).epsilon(1e-8));
}

TEST_CASE("embedding") {
  auto v = embedding_holds(ex("p(t)=3 on (0,1)"), ex("q(t)=2 on (0,1)"));
  CHECK(v.holds == Tri::yes);
  v = embedding_holds(ex("p(t)=2 on (0,1)"), ex("q(t)=3 on (0,1)"));
  CHECK(v.holds == Tri::no);

  v = embedding_holds(ex("p(t)=2+1/(1+t) on (0,inf) dec"), ex("q(t)=2 on (0,inf)"));
  CHECK(v.holds == Tri::yes);
  REQUIRE(v.lambda > 1.0);
  // pq/(p - q) = 4(1 + t) + 2, so the integral of lambda^{-pq/(p-q)} is
  // lambda^{-6} / (4 ln lambda).
  bool checked = false;
  for (const auto& [lambda, result] : v.lambda_scan) {
    if (result.outcome != IntegralOutcome::finite) continue;
    CHECK(result.value == doctest::Approx(std::pow(lambda, -6.0) / (4.0 * std::log(lambda))).epsilon(1e-6));
    checked = true;
  }
  CHECK(checked);

  v = embedding_holds(ex("p(t)=3 on (0,inf)"), ex("q(t)=2 on (0,inf)"));
  CHECK(v.holds == Tri::no);
}

TEST_CASE("log-Hoelder constant") {
  CHECK(log_holder_constant(parse_function_spec("f(t)=2 on (0,1)")) == 0.0);
  const double c = log_holder_constant(parse_function_spec("f(t)=t on (0,1) inc"));
  // The supremum sits on the pair (0, 1), which the grid approaches from inside.
  CHECK(c == doctest::Approx(std::log(std::exp(1.0) + 1.0)).epsilon(5e-3));
  CHECK(c == doctest::Approx(oracle::log_holder_brute([](double t) { return t; }, 0.0, 1.0)).epsilon(1e-3));
  CHECK(std::isinf(log_holder_constant(parse_function_spec("f(t)=1/t on (0,1) dec"))));
}

TEST_CASE("classification of L^inf -> L^p") {
  auto r = classify_left_infty(ex("p(t)=1+ln(1-ln t) on (0,1) dec"));
  CHECK(r.strictly_singular.value == Tri::yes);
  r = classify_left_infty(ex("p(t)=1/t^0.5 on (0,1) dec"));
  CHECK(r.dss.value == Tri::no);
  r = classify_left_infty(ex("p(t)=ln(1/t)^2 on (0, exp(-1)) dec"));
  CHECK(r.strictly_singular.value == Tri::no);
  r = classify_left_infty(ex("p(t)=ln(1/t)^0.5 on (0, exp(-1)) dec"));
  CHECK(r.strictly_singular.value == Tri::yes);
}

TEST_CASE("classification of L^p -> L^1") {
  auto r = classify_right_l1(ex("p(t)=2 on (0,1)"));
  CHECK(r.weakly_compact.value == Tri::yes);
  CHECK(r.dss.value == Tri::yes);
  r = classify_right_l1(ex("p(t)=ln(1/t)^0.5/(ln(1/t)^0.5-1) on (0, exp(-1)) inc"));
  CHECK(r.weakly_compact.value == Tri::yes);
  r = classify_right_l1(ex("p(t)=ln(1/t)^2/(ln(1/t)^2-1) on (0, exp(-1)) inc"));
  CHECK(r.weakly_compact.value == Tri::no);
  r = classify_right_l1(ex("p(t)=1/(1-t) on (0,1) inc"));
  CHECK(r.weakly_compact.value == Tri::no);
}

TEST_CASE("classification of pairs") {
  auto r = classify_pair(ex("p(t)=3 on (0,1)"), ex("q(t)=2 on (0,1)"));
  CHECK(r.dss.value == Tri::yes);
  CHECK(r.l_weakly_compact.value == Tri::yes);
  REQUIRE(r.gap_ess_inf);
  CHECK(*r.gap_ess_inf == doctest::Approx(1.0));

  r = classify_pair(ex("p(t)=2/t on (0,1) dec"), ex("q(t)=1/t on (0,1) dec"));
  CHECK(r.dss.value == Tri::no);
  REQUIRE(r.limit("(p-q)/(pq)"));
  CHECK(r.limit("(p-q)/(pq)")->outcome == LimitOutcome::positive);

  r = classify_pair(ex(kSqrtLog2), ex(kSqrtLog));
  CHECK(r.dss.value == Tri::yes);
  REQUIRE(r.limit("(p-q)/(pq)"));
  CHECK(r.limit("(p-q)/(pq)")->outcome == LimitOutcome::zero);

  r = classify_pair(ex("p(t)=2+t on (0,1) inc"), ex("q(t)=2+t on (0,1) inc"));
  CHECK(r.equality_measure == doctest::Approx(1.0));
  CHECK(r.dss.value == Tri::not_applicable);
}
