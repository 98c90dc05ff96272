#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "vlp/error.hpp"
#include "vlp/rearrangement.hpp"
#include "vlp/spec_format.hpp"

using namespace vlp;

TEST_CASE("distribution counts the strict superlevel set") {
  CHECK(distribution(parse_function_spec("f(t)=t on (0,1) inc"), 0.3) == doctest::Approx(0.7));
  CHECK(distribution(parse_function_spec("f(t)=2 on (0,1)"), 2.0) == 0.0);
  const auto log = parse_function_spec("f(t)=ln(1/t) on (0, exp(-1)) dec");
  CHECK(distribution(log, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
  // Unknown monotonicity falls back on grid counting.
  CHECK(distribution(parse_function_spec("f(t)=t on (0,1)"), 0.3) == doctest::Approx(0.7).epsilon(1e-3));
}

TEST_CASE("increasing functions are reflected") {
  const auto r = rearrange(parse_function_spec("f(t)=t on (0,1) inc"));
  CHECK(r.exact());
  for (double x : {0.0, 0.1, 0.5, 0.9, 0.999}) CHECK(r(x) == doctest::Approx(1.0 - x));
  CHECK(r.at_end_offset(1e-3) == doctest::Approx(1e-3));
}

TEST_CASE("step functions are sorted by height") {
  const auto f = parse_function_spec(
      "f(t)=3 on (0,0.2) const; 0 on (0.2,0.5) const; 1 on (0.5,0.9) const; 0 on (0.9,1) const");
  const auto r = rearrange(f);
  CHECK(r.exact());
  CHECK(r(0.1) == 3.0);
  CHECK(r(0.19) == 3.0);
  CHECK(r(0.21) == 1.0);
  CHECK(r(0.59) == 1.0);
  CHECK(r(0.61) == 0.0);
  CHECK(r(0.99) == 0.0);
  CHECK(r.integral_to(1.0) == doctest::Approx(3.0 * 0.2 + 0.4));
}

TEST_CASE("decreasing functions are translated to the origin") {
  const auto r = rearrange(parse_function_spec("f(t)=ln(1/t) on (0, exp(-1)) dec"));
  CHECK(r.exact());
  CHECK(r.measure() == doctest::Approx(std::exp(-1.0)));
  for (double x : {1e-9, 1e-3, 0.1, 0.3}) CHECK(r(x) == doctest::Approx(std::log(1.0 / x)));
}

TEST_CASE("modes") {
  const auto tent = parse_function_spec("f(t)=t on (0,0.5) inc; 1-t on (0.5,1) dec");
  const auto inv = rearrange(tent);
  CHECK(inv.mode() == RearrangeMode::monotone_inversion);
  for (double x : {0.1, 0.5, 0.9}) CHECK(inv(x) == doctest::Approx(0.5 - x / 2).epsilon(1e-6));

  const auto osc = rearrange(parse_function_spec("f(t)=sin(6*t)^2 on (0,1)"));
  CHECK(osc.mode() == RearrangeMode::numeric);
  CHECK_FALSE(osc.exact());

  RearrangeOptions forced;
  forced.force_mode = RearrangeMode::numeric;
  const auto num = rearrange(parse_function_spec("f(t)=t on (0,1) inc"), forced);
  CHECK(num.mode() == RearrangeMode::numeric);
  CHECK(num(0.25) == doctest::Approx(0.75).epsilon(1e-3));

  forced.force_mode = RearrangeMode::exact;
  CHECK_THROWS_AS(rearrange(tent, forced), PreconditionError);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(rearrange(parse_function_spec("f(t)=t-0.5 on (0,1) inc")), RangeError);
  CHECK_THROWS_AS(rearrange(parse_function_spec("f(t)=1 on (0,inf)")), PreconditionError);
  const auto r = rearrange(parse_function_spec("f(t)=t on (0,1) inc"));
  CHECK_THROWS_AS(r(1.5), DomainError);
  CHECK_THROWS_AS(r.at_end_offset(-1.0), DomainError);
}

TEST_CASE("csv rows sample both ends") {
  const auto r = rearrange(parse_function_spec("f(t)=t on (0,1) inc"));
  std::istringstream in(r.to_csv(40));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,f_star");
  std::vector<double> xs;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double x = std::stod(line.substr(0, comma));
    CHECK(std::stod(line.substr(comma + 1)) == doctest::Approx(1.0 - x));
    xs.push_back(x);
  }
  REQUIRE(xs.size() >= 20);
  // 40 rows reach offsets 2^-10 from either end.
  CHECK(xs.front() <= std::ldexp(1.0, -10));
  CHECK(1.0 - xs.back() <= std::ldexp(1.0, -10) * (1 + 1e-12));
  for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
}
