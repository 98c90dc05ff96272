#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlp/criteria.hpp"
#include "vlp/witness.hpp"

namespace vlp::cli {

enum class Question { left_infinity, right_l1, pair };
enum class Property { dss, strictly_singular, weakly_compact };

std::string to_string(Question q);
std::string to_string(Property p);

struct IntegralCheck {
  double base;
  double value;
  double tol;
};

struct LimitCheck {
  std::string label;
  LimitOutcome outcome;
};

/// One inclusion with its expected verdict. Specs are inline exponent
/// specs; `q` is used only for pairs.
struct FixtureCase {
  std::string id;
  std::string label;
  Question question;
  std::string p;
  std::string q;
  Property property;
  Tri expected;
  std::optional<IntegralCheck> integral;
  std::optional<LimitCheck> limit;
};

const std::vector<FixtureCase>& fixtures();

/// Fixtures whose id starts with `filter` (all when empty).
std::vector<const FixtureCase*> select_fixtures(std::string_view filter);

ClassificationReport classify(Question question, const ExponentFunction& p, const ExponentFunction* q,
                              const LimitOptions& options);

struct CaseResult {
  const FixtureCase* fixture = nullptr;
  ClassificationReport report;
  Verdict verdict;
  bool pass = false;
  std::vector<std::string> problems;
  double seconds = 0.0;
};

CaseResult run_case(const FixtureCase& fixture, const LimitOptions& options = {});

const Verdict& property_of(const ClassificationReport& report, Property property);

struct WitnessRun {
  std::string constructor;
  WitnessSequence witness;
  Space source;
  Space target;
};

/// A disjoint sequence on which the inclusion fails to be strictly
/// singular: level sets for the L^inf source, normalized bands on finite
/// measure, unit blocks on infinite measure. `base` fixes the level-set
/// base a; otherwise the first of 2, e, 10, 100 with a divergent integral.
WitnessRun build_witness(Question question, const ExponentFunction& p, const ExponentFunction* q,
                         std::size_t count, const LimitOptions& options, std::optional<double> base = {});

}  // namespace vlp::cli
