#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "fixtures.hpp"
#include "vlp/error.hpp"
#include "vlp/modular.hpp"
#include "vlp/nakano.hpp"
#include "vlp/rearrangement.hpp"
#include "vlp/report.hpp"
#include "vlp/spec_format.hpp"

namespace vlp::cli {

namespace {

struct Settings {
  std::string out_path;
  bool csv = false;
  std::size_t grid = 0;
  int depth = 0;
  double tol = 1e-6;
  std::size_t witness_n = 8;

  LimitOptions limits() const {
    LimitOptions o;
    if (grid) o.grid.points_per_piece = grid;
    o.depth = depth;
    o.tol = tol;
    return o;
  }
};

// A spec argument is a file path when such a file exists, inline text otherwise.
std::string spec_text(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int exit_for(Tri t) { return t == Tri::indeterminate ? ExitCode::indeterminate : ExitCode::ok; }

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string witness_text(const WitnessRun& run) {
  const WitnessSequence& w = run.witness;
  std::ostringstream os;
  os.precision(10);
  os << "witness: " << run.constructor << " (" << to_string(w.kind) << "), " << w.elements.size()
     << " elements, " << run.source.name() << " -> " << run.target.name() << "\n";
  if (w.base > 0.0) os << "base a: " << w.base << ", beta: " << w.beta << "\n";
  if (w.branch) os << "branch: " << w.branch << "\n";
  os << "disjoint: " << (w.disjoint() ? "yes" : "no") << "\n";
  for (std::size_t n = 0; n < w.elements.size(); ++n) {
    const auto& e = w.elements[n];
    os << "  " << n + 1 << ": " << e.set.to_string() << "  measure " << e.set.measure() << "  norms "
       << e.source_norm << " / " << e.target_norm;
    if (n < w.gaps.size()) os << "  gap " << w.gaps[n];
    if (n < w.limit_values.size()) os << "  limit sample " << w.limit_values[n];
    os << "\n";
  }
  if (!w.levels.empty()) {
    os << "levels:";
    for (double l : w.levels) os << " " << l;
    os << "\n";
  }
  if (w.nakano)
    os << "sequence equivalence: " << to_string(w.nakano->equivalent) << " (" << w.nakano->criterion << ")\n";
  return os.str();
}

std::string section_csv(const SectionReport& s) {
  std::ostringstream os;
  os << "trial,ratio,coefficients\n";
  for (std::size_t i = 0; i < s.ratios.size(); ++i) {
    os << i << "," << csv_number(s.ratios[i]) << ",";
    for (std::size_t k = 0; k < s.coefficients[i].size(); ++k) os << (k ? ";" : "") << csv_number(s.coefficients[i][k]);
    os << "\n";
  }
  return os.str();
}

std::string examples_table(const std::vector<CaseResult>& results) {
  std::ostringstream os;
  os << std::left << std::setw(30) << "id" << std::setw(19) << "property" << std::setw(10) << "expected"
     << std::setw(15) << "computed" << std::setw(7) << "result" << "seconds  criterion\n";
  for (const auto& r : results) {
    os << std::setw(30) << r.fixture->id << std::setw(19) << to_string(r.fixture->property) << std::setw(10)
       << to_string(r.fixture->expected) << std::setw(15) << to_string(r.verdict.value) << std::setw(7)
       << (r.pass ? "pass" : "FAIL") << std::setw(9) << std::fixed << std::setprecision(3) << r.seconds
       << r.verdict.criterion << "\n";
    os.unsetf(std::ios::fixed);
  }
  for (const auto& r : results) {
    if (r.pass) continue;
    os << "\n" << r.fixture->id << " (" << r.fixture->label << "):\n";
    for (const auto& p : r.problems) os << "  " << p << "\n";
    os << format_report(r.report) << evidence_csv(r.report);
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const CaseResult& r) { return r.pass; });
  os << "\n" << passed << "/" << results.size() << " fixtures pass\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inclusions between variable-exponent Lebesgue spaces", "vlp"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "INI/TOML file of default flag values")->envname("VLP_CONFIG");

  Settings s;
  app.add_option("--out", s.out_path, "Write the result to this file instead of stdout");
  app.add_flag("--csv", s.csv, "Emit the CSV evidence trace instead of the text report");
  app.add_option("--grid", s.grid, "Grid points per piece for sampled pieces")->check(CLI::PositiveNumber);
  app.add_option("--depth", s.depth, "Deepest endpoint sample index (offsets b 2^-k)")->check(CLI::Range(4, 1000));
  app.add_option("--tol", s.tol, "Decay threshold counted as reaching zero")->check(CLI::Range(1e-300, 0.5));
  app.add_option("--witness-n", s.witness_n, "Number of witness elements")->check(CLI::Range(1, 64));

  std::string p_arg, q_arg, f_arg, filter;
  auto* pair = app.add_subcommand("classify-pair", "Classify the inclusion L^p -> L^q");
  pair->add_option("p", p_arg, "Source exponent (file or inline spec)")->required();
  pair->add_option("q", q_arg, "Target exponent (file or inline spec)")->required();
  auto* left = app.add_subcommand("classify-left-infty", "Classify the inclusion L^inf -> L^p");
  left->add_option("p", p_arg, "Exponent (file or inline spec)")->required();
  auto* right = app.add_subcommand("classify-right-l1", "Classify the inclusion L^p -> L^1");
  right->add_option("p", p_arg, "Exponent (file or inline spec)")->required();

  auto* norm = app.add_subcommand("norm", "Luxemburg norm of f in L^p");
  norm->add_option("f", f_arg, "Function (file or inline spec)")->required();
  norm->add_option("p", p_arg, "Exponent (file or inline spec)")->required();

  std::size_t points = 17;
  auto* rear = app.add_subcommand("rearrange", "Decreasing rearrangement of |f| as x,f*(x) rows");
  rear->add_option("f", f_arg, "Function (file or inline spec)")->required();
  rear->add_option("--points", points, "Maximum number of rows")->check(CLI::Range(2, 100000));

  std::string question = "auto";
  std::optional<double> base;
  std::size_t trials = 100;
  auto* wit = app.add_subcommand("witness", "Disjoint sequence on which the inclusion is an isomorphism");
  wit->add_option("p", p_arg, "Source exponent, or the target of L^inf -> L^p")->required();
  wit->add_option("q", q_arg, "Target exponent for pairs");
  wit->add_option("--question", question, "left-infty | right-l1 | pair | auto")
      ->check(CLI::IsMember({"auto", "left-infty", "right-l1", "pair"}));
  wit->add_option("--base", base, "Base a of the level-set witness")->check(CLI::Range(1.0 + 1e-12, 1e300));
  wit->add_option("--trials", trials, "Coefficient vectors for the norm comparison")->check(CLI::Range(1, 100000));

  std::size_t horizon = 1000000;
  auto* nak = app.add_subcommand("nakano", "Equivalence of l^{p_n} and l^{q_n}; terms are expressions in n");
  nak->add_option("p_n", p_arg)->required();
  nak->add_option("q_n", q_arg)->required();
  nak->add_option("--horizon", horizon)->check(CLI::Range(256, 100000000));

  auto* ex = app.add_subcommand("examples", "Run the built-in fixture table against the expected verdicts");
  ex->add_option("filter", filter, "Only fixtures whose id starts with this");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  std::ostringstream doc;
  int code = ExitCode::ok;
  try {
    const LimitOptions opt = s.limits();
    auto exponent = [&](const std::string& arg) { return parse_exponent_spec(spec_text(arg), {}, opt.grid); };

    if (*pair || *left || *right) {
      const ExponentFunction p = exponent(p_arg);
      std::optional<ExponentFunction> q;
      if (*pair) q = exponent(q_arg);
      const Question which = *pair ? Question::pair : *left ? Question::left_infinity : Question::right_l1;
      const ClassificationReport r = classify(which, p, q ? &*q : nullptr, opt);
      doc << (s.csv ? evidence_csv(r) : format_report(r));
      code = exit_for(r.headline().value);
    } else if (*norm) {
      const PiecewiseFunction f = parse_function_spec(spec_text(f_arg));
      const NormValue v = luxemburg_norm(f, exponent(p_arg));
      doc << std::fixed << std::setprecision(10) << v.value << "\n";
    } else if (*rear) {
      const RearrangedFunction r = rearrange(parse_function_spec(spec_text(f_arg)), {opt.grid, std::nullopt});
      if (!s.csv) doc << "mode: " << to_string(r.mode()) << ", measure " << r.measure() << "\n";
      doc << r.to_csv(points);
    } else if (*wit) {
      const ExponentFunction p = exponent(p_arg);
      std::optional<ExponentFunction> q;
      if (!q_arg.empty()) q = exponent(q_arg);
      Question which = q ? Question::pair : Question::left_infinity;
      if (question == "left-infty") which = Question::left_infinity;
      if (question == "right-l1") which = Question::right_l1;
      if (question == "pair") which = Question::pair;
      const WitnessRun w = build_witness(which, p, q ? &*q : nullptr, s.witness_n, opt, base);
      const SectionReport sec = section_equivalence_check(w.witness, w.source, w.target, trials);
      if (!s.csv) {
        doc << witness_text(w);
        doc << "norm ratio over " << sec.ratios.size() << " trials: min " << sec.min_ratio << ", max "
            << sec.max_ratio << ", spread " << sec.spread() << "\n";
      }
      doc << section_csv(sec);
    } else if (*nak) {
      const Expr pe = parse_expr(p_arg, {}, {"n"});
      const Expr qe = parse_expr(q_arg, {}, {"n"});
      const NakanoVerdict v = nakano_equivalent([&](std::size_t n) { return pe(static_cast<double>(n)); },
                                                [&](std::size_t n) { return qe(static_cast<double>(n)); }, horizon);
      doc << "equivalent: " << to_string(v.equivalent) << " (" << v.criterion << ")\n";
      if (v.equivalent == Tri::yes) doc << "alpha: " << v.alpha << "\n";
      doc << "slopes: " << v.slope_early << " early, " << v.slope_late << " late\n";
      doc << "max e_n: " << v.max_early << " early, " << v.max_late << " late\n";
      doc << "min e_n: " << v.min_early << " early, " << v.min_late << " late\n";
      code = exit_for(v.equivalent);
    } else if (*ex) {
      const auto chosen = select_fixtures(filter);
      if (chosen.empty()) throw PreconditionError("no fixture id starts with '" + filter + "'");
      std::vector<CaseResult> results;
      for (const FixtureCase* f : chosen) results.push_back(run_case(*f, opt));
      doc << examples_table(results);
      const bool all = std::all_of(results.begin(), results.end(), [](const CaseResult& r) { return r.pass; });
      code = all ? ExitCode::ok : ExitCode::indeterminate;
    }
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return ExitCode::precondition;
  } catch (const NotInSpaceError& e) {
    err << "not in the space: " << e.what() << "\n";
    return ExitCode::precondition;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return ExitCode::indeterminate;
  } catch (const WitnessError& e) {
    err << "witness failed: " << e.what() << "\n";
    return ExitCode::indeterminate;
  }

  if (s.out_path.empty()) {
    out << doc.str();
  } else {
    std::ofstream file(s.out_path);
    if (!(file << doc.str())) {
      err << "cannot write " << s.out_path << "\n";
      return ExitCode::usage;
    }
  }
  return code;
}

}  // namespace vlp::cli
