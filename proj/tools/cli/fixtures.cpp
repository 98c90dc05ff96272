#include "fixtures.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "vlp/error.hpp"
#include "vlp/spec_format.hpp"

namespace vlp::cli {

std::string to_string(Question q) {
  switch (q) {
    case Question::left_infinity: return "left-infty";
    case Question::right_l1: return "right-l1";
    case Question::pair: return "pair";
  }
  return "?";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::dss: return "DSS";
    case Property::strictly_singular: return "strictly singular";
    case Property::weakly_compact: return "weakly compact";
  }
  return "?";
}

namespace {

std::vector<FixtureCase> build() {
  using Q = Question;
  using P = Property;
  std::vector<FixtureCase> v;
  v.push_back({"loglog-left", "L^inf -> L^{1+ln(1-ln t)} on (0,1)", Q::left_infinity,
               "p(t)=1+ln(1-ln t) on (0,1) dec", "", P::strictly_singular, Tri::yes,
               IntegralCheck{std::numbers::e, 2.0 * std::numbers::e, 1e-3}, std::nullopt});

  for (const char* a : {"0.5", "1", "2"}) {
    const std::string p = std::string("p(t)=t^(-") + a + ") on (0,1) dec";
    v.push_back({std::string("inverse-power/left/") + a, std::string("L^inf -> L^{t^-") + a + "}", Q::left_infinity,
                 p, "", P::dss, Tri::no, {}, {}});
    v.push_back({std::string("inverse-power/l1/") + a, std::string("L^{t^-") + a + "} -> L^1", Q::right_l1, p, "",
                 P::dss, Tri::no, {}, {}});
  }
  v.push_back({"inverse-power/pair/0.8-0.3", "L^{t^-0.8} -> L^{t^-0.3}", Q::pair, "p(t)=t^(-0.8) on (0,1) dec",
               "q(t)=t^(-0.3) on (0,1) dec", P::dss, Tri::no, {}, {}});
  v.push_back({"inverse-power/pair/2-1.5", "L^{t^-2} -> L^{t^-1.5}", Q::pair, "p(t)=t^(-2) on (0,1) dec",
               "q(t)=t^(-1.5) on (0,1) dec", P::dss, Tri::no, {}, {}});

  for (const char* a : {"0.5", "1"}) {
    const std::string p = std::string("p(t)=(1-t)^(-") + a + ") on (0,1) inc";
    v.push_back({std::string("reflected-power/l1/") + a, std::string("L^{(1-t)^-") + a + "} -> L^1", Q::right_l1,
                 p, "", P::weakly_compact, Tri::no, {}, {}});
    v.push_back({std::string("reflected-power/left/") + a, std::string("L^inf -> L^{(1-t)^-") + a + "}",
                 Q::left_infinity, p, "", P::weakly_compact, Tri::no, {}, {}});
  }

  for (const auto& [a, ss] : {std::pair{"0.5", Tri::yes}, {"0.9", Tri::yes}, {"1", Tri::no}, {"2", Tri::no}}) {
    v.push_back({std::string("log-power/left/") + a, std::string("L^inf -> L^{ln(1/t)^") + a + "} on (0,1/e)",
                 Q::left_infinity, std::string("p(t)=ln(1/t)^") + a + " on (0,1/e) dec", "", P::strictly_singular,
                 ss, {}, {}});
  }
  for (const char* a : {"0.5", "2"}) {
    v.push_back({std::string("log-power/l1/") + a, std::string("L^{ln(1/t)^") + a + "} -> L^1 on (0,1/e)",
                 Q::right_l1, std::string("p(t)=ln(1/t)^") + a + " on (0,1/e) dec", "", P::dss, Tri::no, {}, {}});
  }
  v.push_back({"log-power/pair/1.5-0.5", "L^{ln(1/t)^1.5} -> L^{ln(1/t)^0.5} on (0,1/e)", Q::pair,
               "p(t)=ln(1/t)^1.5 on (0,1/e) dec", "q(t)=ln(1/t)^0.5 on (0,1/e) dec", P::dss, Tri::no, {}, {}});

  for (const auto& [a, wc] : {std::pair{"0.5", Tri::yes}, {"2", Tri::no}}) {
    const std::string l = std::string("ln(1/t)^") + a;
    v.push_back({std::string("log-power-conjugate/l1/") + a, "L^{" + l + "/(" + l + "-1)} -> L^1 on (0,1/e)",
                 Q::right_l1, "p(t)=" + l + "/(" + l + "-1) on (0,1/e) inc", "", P::weakly_compact, wc, {}, {}});
  }

  for (const char* e : {"0.5", "1"}) {
    v.push_back({std::string("sqrt-log-pair/") + e,
                 std::string("L^{(1+") + e + ") sqrt(ln(1/t))} -> L^{sqrt(ln(1/t))} on (0,1/e)", Q::pair,
                 std::string("p(t)=(1+") + e + ")*sqrt(ln(1/t)) on (0,1/e) dec", "q(t)=sqrt(ln(1/t)) on (0,1/e) dec",
                 P::dss, Tri::yes, {}, {}});
  }

  v.push_back({"inverse-pair", "L^{2/t} -> L^{1/t}", Q::pair, "p(t)=2/t on (0,1) dec", "q(t)=1/t on (0,1) dec",
               P::dss, Tri::no, std::nullopt, LimitCheck{"(p-q)/p", LimitOutcome::zero}});
  v.push_back({"holder-pair", "L^{2+t^0.5} -> L^2", Q::pair, "p(t)=2+t^0.5 on (0,1) inc", "q(t)=2 on (0,1)", P::dss,
               Tri::no, {}, {}});
  return v;
}

}  // namespace

const std::vector<FixtureCase>& fixtures() {
  static const std::vector<FixtureCase> all = build();
  return all;
}

std::vector<const FixtureCase*> select_fixtures(std::string_view filter) {
  std::vector<const FixtureCase*> out;
  for (const auto& f : fixtures())
    if (std::string_view(f.id).starts_with(filter)) out.push_back(&f);
  return out;
}

ClassificationReport classify(Question question, const ExponentFunction& p, const ExponentFunction* q,
                              const LimitOptions& options) {
  switch (question) {
    case Question::left_infinity: return classify_left_infty(p, options);
    case Question::right_l1: return classify_right_l1(p, options);
    case Question::pair:
      if (!q) throw PreconditionError("pair classification needs a target exponent");
      return classify_pair(p, *q, options);
  }
  throw PreconditionError("unknown question");
}

const Verdict& property_of(const ClassificationReport& report, Property property) {
  switch (property) {
    case Property::dss: return report.dss;
    case Property::strictly_singular: return report.strictly_singular;
    case Property::weakly_compact: return report.weakly_compact;
  }
  return report.dss;
}

CaseResult run_case(const FixtureCase& fixture, const LimitOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult r;
  r.fixture = &fixture;
  const ExponentFunction p = parse_exponent_spec(fixture.p, {}, options.grid);
  std::optional<ExponentFunction> q;
  if (fixture.question == Question::pair) q = parse_exponent_spec(fixture.q, {}, options.grid);
  r.report = classify(fixture.question, p, q ? &*q : nullptr, options);
  r.verdict = property_of(r.report, fixture.property);

  if (r.verdict.value != fixture.expected)
    r.problems.push_back(to_string(fixture.property) + " is " + to_string(r.verdict.value) + ", expected " +
                         to_string(fixture.expected));
  if (fixture.integral) {
    const auto& want = *fixture.integral;
    const ExpIntegral got = exp_integral(p, want.base);
    if (got.result.outcome != IntegralOutcome::finite || std::abs(got.result.value - want.value) > want.tol)
      r.problems.push_back("integral of a^p at a = " + std::to_string(want.base) + " is " +
                           to_string(got.result.outcome) + " " + std::to_string(got.result.value) + ", expected " +
                           std::to_string(want.value));
  }
  if (fixture.limit) {
    const LimitVerdict* got = r.report.limit(fixture.limit->label);
    if (!got)
      r.problems.push_back("limit " + fixture.limit->label + " missing from the report");
    else if (got->outcome != fixture.limit->outcome)
      r.problems.push_back("limit " + fixture.limit->label + " is " + to_string(got->outcome) + ", expected " +
                           to_string(fixture.limit->outcome));
  }
  r.pass = r.problems.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

WitnessRun build_witness(Question question, const ExponentFunction& p, const ExponentFunction* q,
                         std::size_t count, const LimitOptions& options, std::optional<double> base) {
  WitnessRun run;
  const bool infinite = !p.domain().finite_measure();
  switch (question) {
    case Question::left_infinity: {
      if (infinite) throw PreconditionError("level-set witness needs a finite-measure domain");
      std::optional<double> a = base;
      if (!a) {
        for (double cand : {2.0, std::numbers::e, 10.0, 100.0})
          if (exp_integral(p, cand).result.outcome == IntegralOutcome::divergent) {
            a = cand;
            break;
          }
      }
      if (!a) throw PreconditionError("integral of a^p is not divergent for a in {2, e, 10, 100}");
      run.constructor = "level sets";
      run.witness = level_set_witness(p, *a, count, options);
      run.source = Space::infinity();
      run.target = Space::of(p);
      return run;
    }
    case Question::right_l1: {
      const ExponentFunction one = ExponentFunction::constant(p.domain(), 1.0, "1");
      run.constructor = infinite ? "unit blocks" : "normalized bands";
      run.witness = infinite ? infinite_measure_witness(p, one, count, options.grid)
                             : dss_failure_witness(p, one, count, options);
      run.source = Space::of(p);
      run.target = Space::of(one);
      return run;
    }
    case Question::pair: {
      if (!q) throw PreconditionError("pair witness needs a target exponent");
      run.constructor = infinite ? "unit blocks" : "normalized bands";
      run.witness = infinite ? infinite_measure_witness(p, *q, count, options.grid)
                             : dss_failure_witness(p, *q, count, options);
      run.source = Space::of(p);
      run.target = Space::of(*q);
      return run;
    }
  }
  throw PreconditionError("unknown question");
}

}  // namespace vlp::cli
