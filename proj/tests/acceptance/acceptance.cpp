// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "suites.hpp"

namespace {

bool report(int criterion, const std::string& what, const std::vector<suites::Result>& parts) {
  bool ok = true;
  for (const auto& r : parts) ok = ok && r.ok();
  std::cout << "criterion " << criterion << ": " << (ok ? "pass" : "fail") << "  " << what << "\n";
  for (const auto& r : parts) std::cout << "  " << suites::describe(r) << "\n";
  std::cout.flush();
  return ok;
}

suites::Result fixture_table() {
  suites::Result r;
  r.name = "fixture table";
  for (const auto& fx : vlp::cli::fixtures()) {
    const auto res = vlp::cli::run_case(fx);
    ++r.fixtures;
    r.seconds += res.seconds;
    if (!res.pass) {
      std::string msg = fx.id + ": got " + vlp::to_string(res.verdict.value);
      for (const auto& p : res.problems) msg += "; " + p;
      r.fail(msg);
    }
  }
  return r;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "fixture table verdicts reproduced", {fixture_table()});
  ok &= report(2, "invariants hold on generated fixtures", suites::all_invariants());
  ok &= report(3, "witnesses validated for every negative verdict", {suites::witnesses()});
  ok &= report(4, "Nakano verdicts agree with partial sums", {suites::nakano_agreement()});
  ok &= report(5, "no wrong decisive verdict on oscillating fixtures", {suites::adversarial()});
  return ok ? 0 : 1;
}
