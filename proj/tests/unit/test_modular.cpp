#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vlp/error.hpp"
#include "vlp/modular.hpp"
#include "vlp/spec_format.hpp"

using namespace vlp;

namespace {
const char* kSplit = "p(t)=2 on (0,0.5) const; 3 on (0.5,1) const";
}

TEST_CASE("modular") {
  const auto two = parse_exponent_spec("p(t)=2 on (0,1)");
  auto m = modular(parse_function_spec("f(t)=1 on (0,1)"), two);
  CHECK(m.outcome == IntegralOutcome::finite);
  CHECK(m.value == doctest::Approx(1.0));

  m = modular(parse_function_spec("f(t)=t on (0,1) inc"), parse_exponent_spec("p(t)=3 on (0,1)"));
  CHECK(m.value == doctest::Approx(0.25).epsilon(1e-9));

  m = modular(parse_function_spec("f(t)=0.5 on (0,1)"), parse_exponent_spec(kSplit));
  CHECK(m.value == doctest::Approx(3.0 / 16.0).epsilon(1e-12));

  // rho(f / 2) scales a constant exponent by 2^-p.
  m = modular(parse_function_spec("f(t)=1 on (0,1)"), two, 2.0);
  CHECK(m.value == doctest::Approx(0.25));

  m = modular(parse_function_spec("f(t)=1/t on (0,1) dec"), two);
  CHECK(m.outcome == IntegralOutcome::divergent);
  CHECK(std::isinf(m.value));
}

TEST_CASE("Luxemburg norm") {
  auto n = luxemburg_norm(parse_function_spec("f(t)=1 on (0,1)"), parse_exponent_spec("p(t)=2 on (0,1)"));
  CHECK(n.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(n.r_lo <= n.r_hi);

  n = luxemburg_norm(parse_function_spec("f(t)=1 on (0,0.5) const; 0 on (0.5,1) const"), parse_exponent_spec(kSplit));
  CHECK(n.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));

  n = luxemburg_norm(parse_function_spec("f(t)=t on (0,1) inc"), parse_exponent_spec("p(t)=3 on (0,1)"));
  CHECK(n.value == doctest::Approx(std::pow(4.0, -1.0 / 3.0)).epsilon(1e-9));
  CHECK(n.r_hi - n.r_lo <= 1e-9 * n.r_hi);

  CHECK_THROWS_AS(luxemburg_norm(parse_function_spec("f(t)=1/t on (0,1) dec"), parse_exponent_spec("p(t)=2 on (0,1)")),
                  NotInSpaceError);
}

TEST_CASE("norm of an indicator") {
  const auto two = parse_exponent_spec("p(t)=2 on (0,1)");
  CHECK(char_norm(IntervalSet{{0.0, 1.0}}, two).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(char_norm(IntervalSet{{0.0, 0.25}}, two).value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(char_norm(IntervalSet{{0.0, 0.1}, {0.5, 0.65}}, two).value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(char_norm(IntervalSet{}, two), DomainError);

  // rho(chi_E / r) = int_0^{1/2} r^{-1/t} dt is infinite for every r < 1 and
  // 1/2 at r = 1, so the norm is exactly 1.
  const auto inv = parse_exponent_spec("p(t)=1/t on (0,1) dec");
  const auto n = char_norm(IntervalSet{{0.0, 0.5}}, inv);
  const auto rho = [](double r) {
    return oracle::integrate([r](double t) { return std::pow(1.0 / r, 1.0 / t); }, 0.0, 0.5);
  };
  CHECK(rho(n.r_hi) <= 1.0 + 1e-9);
  CHECK(rho(1.0) == doctest::Approx(0.5));
  CHECK(rho(0.99) > 1.0);
  CHECK(n.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Hoelder pairing stays within the constant 4") {
  const auto two = parse_exponent_spec("p(t)=2 on (0,1)");
  const auto one = parse_function_spec("g(t)=1 on (0,1)");

  auto h = holder_pairing(one, one, two);
  CHECK(h.value == doctest::Approx(1.0));
  CHECK(h.bound == doctest::Approx(4.0).epsilon(1e-8));

  h = holder_pairing(parse_function_spec("f(t)=t on (0,1) inc"), one, two);
  CHECK(h.value == doctest::Approx(0.5));
  CHECK(h.norm_f == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-8));
  CHECK(h.bound == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-8));
  CHECK(h.value <= h.bound);

  h = holder_pairing(parse_function_spec("f(t)=1 on (0,0.5) const; 0 on (0.5,1) const"),
                     parse_function_spec("g(t)=0 on (0,0.5) const; 1 on (0.5,1) const"),
                     parse_exponent_spec("p(t)=1+t on (0,1) inc"));
  CHECK(h.value == 0.0);
}
