#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vlp/error.hpp"
#include "vlp/nakano.hpp"

using namespace vlp;

TEST_CASE("identical sequences") {
  const auto p = [](std::size_t n) { return 2.0 + std::sin(static_cast<double>(n)); };
  const auto v = nakano_equivalent(p, p);
  CHECK(v.equivalent == Tri::yes);
}

TEST_CASE("bounded exponent gap ratio") {
  const auto p = [](std::size_t) { return 2.0; };
  const auto q = [](std::size_t) { return 3.0; };
  const auto v = nakano_equivalent(p, q);
  CHECK(v.equivalent == Tri::no);
  CHECK(v.max_late == doctest::Approx(6.0));
  CHECK_FALSE(oracle::nakano_brute(p, q));
}

TEST_CASE("logarithmic growth gives a summable power") {
  const auto p = [](std::size_t n) { return 2.0 + 1.0 / std::log(static_cast<double>(n) + 1.0); };
  const auto q = [](std::size_t) { return 2.0; };
  const auto v = nakano_equivalent(p, q);
  CHECK(v.equivalent == Tri::yes);
  CHECK(v.alpha == 0.5);
  CHECK(oracle::nakano_brute(p, q));
  // Oracle: sum of 0.5^{e_n} to 10^6 against its tail beyond 10^5.
  double head = 0.0, tail = 0.0;
  for (std::size_t n = 1; n <= 1000000; ++n) {
    const double e = p(n) * q(n) / std::abs(p(n) - q(n));
    (n <= 100000 ? head : tail) += std::pow(0.5, e);
  }
  CHECK(tail < 1e-3 * head);
}

TEST_CASE("invalid sequences") {
  const auto one = [](std::size_t) { return 2.0; };
  CHECK_THROWS_AS(nakano_equivalent(one, [](std::size_t) { return 0.5; }), RangeError);
  CHECK_THROWS_AS(nakano_equivalent(one, [](std::size_t) { return NAN; }), RangeError);
  CHECK_THROWS_AS(nakano_equivalent(one, one, 10), PreconditionError);
}
