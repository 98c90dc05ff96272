#include "vlp/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "vlp/error.hpp"
#include "vlp/modular.hpp"

namespace vlp {

namespace {

double ulp_of(double x) { return std::nextafter(std::abs(x), kInf) - std::abs(x); }

// Least-squares slope of ys against xs.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  if (xs.size() < 2) return std::nan("");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : std::nan("");
}

double smallest_offset(const RearrangedFunction& rf) {
  const PiecewiseFunction& g = rf.source();
  switch (rf.mode()) {
    case RearrangeMode::exact: {
      if (g.is_step() || g.pieces().size() != 1) return 1e-300;
      const Piece& p = g.pieces()[0];
      const double end = p.monotone == Monotonicity::increasing ? p.span.lo
                         : p.monotone == Monotonicity::decreasing ? p.span.hi
                                                                  : 0.0;
      return end == 0.0 ? 1e-300 : 1024.0 * ulp_of(end);
    }
    case RearrangeMode::monotone_inversion:
      return 1024.0 * ulp_of(g.domain().hi());
    case RearrangeMode::numeric:
      return 2.0 * rf.end_resolution();
  }
  return 1e-300;
}

std::size_t tail_start(std::size_t n) { return n - std::max<std::size_t>(4, n / 4); }

}  // namespace

std::string to_string(LimitOutcome o) {
  switch (o) {
    case LimitOutcome::zero: return "ZERO";
    case LimitOutcome::positive: return "POSITIVE";
    case LimitOutcome::indeterminate: return "INDETERMINATE";
  }
  return "?";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::indeterminate: return "INDETERMINATE";
    case Tri::not_applicable: return "n/a";
  }
  return "?";
}

LimitVerdict endpoint_limit(const PiecewiseFunction& g, const LimitOptions& options) {
  if (!g.domain().finite_measure()) throw PreconditionError("endpoint limit needs a finite-measure domain");
  const RearrangedFunction rf = rearrange(g, {options.grid, std::nullopt});
  const double b = g.domain().measure();

  LimitVerdict out;
  out.mode = rf.mode();
  const bool exact_single = rf.mode() == RearrangeMode::exact;
  const int depth = options.depth > 0 ? options.depth : (exact_single ? 120 : 48);
  const double floor = smallest_offset(rf);

  std::vector<double> h;
  std::vector<double> u;
  for (int k = 4; k <= depth; ++k) {
    const double d = std::ldexp(b, -k);
    if (d < floor) break;
    const double gs = rf.at_end_offset(d);
    const double lu = -std::log(d);
    out.evidence.push_back({d, b - d, gs, -gs * lu});
    if (std::isnan(gs)) {
      out.note = "rearrangement is not finite near the endpoint";
      return out;
    }
    h.push_back(std::max(0.0, gs) * lu);
    u.push_back(lu);
  }
  if (h.size() < 8) {
    out.note = "resolution floor reached after " + std::to_string(h.size()) + " samples";
    return out;
  }

  const double threshold = std::log(1.0 / options.tol);
  const std::size_t t0 = tail_start(h.size());
  const double h_last = h.back();

  if (rf.mode() == RearrangeMode::numeric) {
    // Grid-resolved rearrangements cannot see the endpoint trend; only a
    // gap function bounded away from zero decides.
    const EssBounds eb = ess_bounds(g, std::nullopt, options.grid);
    if (eb.ess_inf >= 0.05) {
      out.outcome = LimitOutcome::zero;
      out.note = "numeric rearrangement; sampled ess inf " + std::to_string(eb.ess_inf) + " >= 0.05";
    } else {
      out.note = "numeric rearrangement with sampled ess inf " + std::to_string(eb.ess_inf) +
                 " near zero; endpoint trend not resolvable on the grid";
    }
    return out;
  }

  bool tiny = true, nondecreasing = true, positive = true;
  for (std::size_t i = t0; i < h.size(); ++i) {
    tiny = tiny && h[i] <= 1e-12;
    positive = positive && h[i] > 0.0;
    if (i > t0) nondecreasing = nondecreasing && h[i] >= h[i - 1] * (1.0 - 1e-12);
  }
  if (tiny) {
    out.outcome = LimitOutcome::positive;
    out.limit = 1.0;
    out.slope = 0.0;
    out.note = "exponent vanishes faster than 1/ln(1/(b-x))";
    return out;
  }
  if (!positive) {
    out.note = "rearrangement vanishes on part of the tail but not all of it";
    return out;
  }
  std::vector<double> lx, ly;
  for (std::size_t i = t0; i < h.size(); ++i) {
    lx.push_back(std::log(u[i]));
    ly.push_back(std::log(h[i]));
  }
  out.slope = fit_slope(lx, ly);

  if (h_last > threshold && nondecreasing) {
    out.outcome = LimitOutcome::zero;
    out.note = "log of (b-x)^{g*} below ln(tau) and still decreasing";
    return out;
  }
  // Local log-log slopes on the two halves of the sampled range, extrapolated
  // linearly in 1/u to u = infinity: about 0 when g*(x) ln(1/(b-x)) converges
  // (slope ~ K/u), the exponent when it grows like a power of u.
  std::vector<double> ax, ay;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] > 0.0) {
      ax.push_back(std::log(u[i]));
      ay.push_back(std::log(h[i]));
    }
  const std::size_t half = ax.size() / 2;
  const std::vector<double> x1(ax.begin(), ax.begin() + half + 1), y1(ay.begin(), ay.begin() + half + 1);
  const std::vector<double> x2(ax.begin() + half, ax.end()), y2(ay.begin() + half, ay.end());
  const double s1 = fit_slope(x1, y1), s2 = fit_slope(x2, y2);
  auto inv_mean = [](const std::vector<double>& lx) {
    return std::exp(-std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(lx.size()));
  };
  const double w1 = inv_mean(x1), w2 = inv_mean(x2);
  const double limiting_slope = w1 > w2 ? s2 - (s1 - s2) * w2 / (w1 - w2) : s2;
  if (out.slope >= 0.05 && nondecreasing && limiting_slope >= 0.05) {
    out.outcome = LimitOutcome::zero;
    out.note = "log of (b-x)^{g*} decreases like a power of ln(1/(b-x))";
    return out;
  }
  if (out.slope <= 0.02 && h_last <= threshold) {
    out.outcome = LimitOutcome::positive;
    out.limit = std::exp(-h_last);
    out.note = "log of (b-x)^{g*} stays bounded";
    return out;
  }
  out.note = "tail trend between the ZERO and POSITIVE windows";
  return out;
}

LimitVerdict marcinkiewicz_limit(const PiecewiseFunction& p, const LimitOptions& options) {
  if (!p.domain().finite_measure()) throw PreconditionError("Marcinkiewicz limit needs a finite-measure domain");
  const RearrangedFunction rf = rearrange(p, {options.grid, std::nullopt});
  const double b = p.domain().measure();
  LimitVerdict out;
  out.mode = rf.mode();

  constexpr int kFirst = 2, kLast = 40;
  std::vector<double> integral(kLast + 1, 0.0);
  if (rf.mode() == RearrangeMode::monotone_inversion) {
    // Cumulative panels between consecutive sample points.
    const double x_last = std::ldexp(b, -kLast);
    integral[kLast] = rf.integral_to(x_last);
    for (int k = kLast - 1; k >= kFirst; --k) {
      const double a = std::ldexp(b, -k - 1), c = std::ldexp(b, -k);
      integral[k] = integral[k + 1] + gauss_kronrod([&](double y) { return rf(y); }, a, c, 1e-8);
    }
  } else {
    for (int k = kFirst; k <= kLast; ++k) integral[k] = rf.integral_to(std::ldexp(b, -k));
  }

  std::vector<double> lx, ly, ratio;
  for (int k = kFirst; k <= kLast; ++k) {
    const double x = std::ldexp(b, -k);
    const double denom = x * std::log(std::numbers::e / x);
    const double r = integral[k] / denom;
    out.evidence.push_back({x, x, integral[k], r});
    if (std::isnan(r)) {
      out.note = "integral of p* is not finite";
      return out;
    }
    ratio.push_back(r);
  }
  if (std::isinf(ratio.back())) {
    out.outcome = LimitOutcome::positive;
    out.limit = kInf;
    out.note = "p* is not integrable near 0";
    return out;
  }
  const std::size_t t0 = ratio.size() - 10;
  bool decreasing = true;
  for (std::size_t i = t0; i < ratio.size(); ++i) {
    const int k = kFirst + static_cast<int>(i);
    lx.push_back(std::log(std::log(std::numbers::e / std::ldexp(b, -k))));
    ly.push_back(std::log(ratio[i]));
    if (i > t0) decreasing = decreasing && ratio[i] < ratio[i - 1];
  }
  out.slope = fit_slope(lx, ly);
  out.limit = ratio.back();
  // Grid-sampled rearrangements of oscillating exponents bias the slope by
  // about 0.1 either way, so numeric mode needs a clear margin.
  const bool numeric = rf.mode() == RearrangeMode::numeric;
  const double zero_slope = numeric ? -0.3 : -0.05;
  const double positive_slope = numeric ? 0.3 : -0.01;
  if ((out.slope <= zero_slope && decreasing) || ratio.back() < 1e-3) {
    out.outcome = LimitOutcome::zero;
    out.note = "ratio decays like a negative power of ln(e/x)";
  } else if (out.slope >= positive_slope) {
    out.outcome = LimitOutcome::positive;
    out.note = "ratio bounded away from 0";
  } else {
    out.note = "ratio decays too slowly to classify";
  }
  return out;
}

ExpIntegral exp_integral(const PiecewiseFunction& r, double a, const QuadratureOptions& options) {
  if (!(a > 1.0)) throw PreconditionError("exp_integral needs a base a > 1");
  ExpIntegral out{a, {}};
  out.result.outcome = IntegralOutcome::finite;
  const double la = std::log(a);
  for (const auto& piece : r.pieces()) {
    IntegralResult part;
    if (piece.expr.is_constant()) {
      part.outcome = IntegralOutcome::finite;
      part.value = std::exp(la * piece.expr.constant_value()) * piece.span.length();
      if (std::isinf(part.value)) part.outcome = IntegralOutcome::divergent;
    } else {
      part = integrate([&](double t) { return std::exp(la * piece.expr(t)); }, piece.span, options);
    }
    if (part.outcome == IntegralOutcome::divergent) out.result.outcome = IntegralOutcome::divergent;
    else if (part.outcome == IntegralOutcome::indeterminate && out.result.outcome != IntegralOutcome::divergent)
      out.result.outcome = IntegralOutcome::indeterminate;
    out.result.value += part.value;
    out.result.error += part.error;
    if (!part.note.empty()) out.result.note = part.note;
    if (!part.lo_trace.empty() || !part.hi_trace.empty()) {
      out.result.lo_trace = part.lo_trace;
      out.result.hi_trace = part.hi_trace;
    }
  }
  if (out.result.outcome == IntegralOutcome::divergent) out.result.value = kInf;
  return out;
}

double log_holder_constant(const PiecewiseFunction& f, const GridOptions& grid) {
  if (!f.domain().finite_measure()) throw PreconditionError("log-Hoelder estimate needs a bounded interval");
  const EssBounds eb = ess_bounds(f, std::nullopt, grid);
  if (!std::isfinite(eb.ess_inf) || !std::isfinite(eb.ess_sup)) return kInf;

  const double lo = f.domain().lo(), hi = f.domain().hi(), b = hi - lo;
  auto value = [&](double t) { return f(t); };
  auto weight = [](double dist) { return std::log(std::numbers::e + 1.0 / dist); };

  std::vector<double> estimates;
  for (int level = 1; level <= 4; ++level) {
    const int n = 25 << level;
    std::vector<double> xs, vs;
    for (int i = 0; i < n; ++i) xs.push_back(lo + (i + 0.5) * b / n);
    for (int j = 1; j <= 12 * level; ++j) {
      xs.push_back(lo + std::ldexp(b, -j));
      xs.push_back(hi - std::ldexp(b, -j));
    }
    std::erase_if(xs, [&](double x) { return !(x > lo && x < hi); });
    for (double x : xs) vs.push_back(value(x));

    double c = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j)
        if (std::isfinite(vs[i]) && std::isfinite(vs[j]))
          c = std::max(c, std::abs(vs[i] - vs[j]) * weight(std::abs(xs[i] - xs[j])));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(vs[i])) continue;
      for (int k = 1; k <= 12 * level + 8; ++k) {
        const double delta = std::ldexp(b, -k);
        for (double y : {xs[i] + delta, xs[i] - delta}) {
          if (!(y > lo && y < hi) || y == xs[i]) continue;
          const double fy = value(y);
          if (std::isfinite(fy)) c = std::max(c, std::abs(vs[i] - fy) * weight(std::abs(xs[i] - y)));
        }
      }
    }
    estimates.push_back(c);
  }
  const std::size_t m = estimates.size();
  if (estimates[m - 1] > 1.1 * estimates[m - 2] && estimates[m - 2] > 1.1 * estimates[m - 3]) return kInf;
  return estimates.back();
}

EmbeddingVerdict embedding_holds(const ExponentFunction& p, const ExponentFunction& q, const GridOptions& grid) {
  EmbeddingVerdict out;
  out.comparison = pointwise_compare(p, q, grid);
  if (!out.comparison.q_le_p) {
    out.holds = Tri::no;
    out.criterion = "q > p on a set of positive measure";
    return out;
  }
  if (p.domain().finite_measure()) {
    out.holds = Tri::yes;
    out.criterion = "finite measure and q <= p a.e.";
    return out;
  }

  // Common refinement of the pieces keeps singular points at panel ends.
  std::vector<double> cuts;
  for (const auto& pc : p.function().pieces()) cuts.push_back(pc.span.lo);
  for (const auto& pc : q.function().pieces()) cuts.push_back(pc.span.lo);
  cuts.push_back(p.domain().hi());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // The integral decreases in lambda, so one divergent large lambda settles
  // every smaller one.
  bool all_divergent = true;
  for (double lambda : {2.0, 16.0, 65536.0, 0x1p64}) {
    const double ll = std::log(lambda);
    auto integrand = [&](double t) {
      const double pv = p(t), qv = q(t);
      if (!(pv > qv)) return 0.0;
      return std::exp(-ll * pv * qv / (pv - qv));
    };
    IntegralResult total;
    total.outcome = IntegralOutcome::finite;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const IntegralResult part = integrate(integrand, {cuts[i], cuts[i + 1]});
      if (part.outcome == IntegralOutcome::divergent) total.outcome = IntegralOutcome::divergent;
      else if (part.outcome == IntegralOutcome::indeterminate && total.outcome != IntegralOutcome::divergent)
        total.outcome = IntegralOutcome::indeterminate;
      total.value += part.value;
    }
    out.lambda_scan.emplace_back(lambda, total);
    if (total.outcome == IntegralOutcome::finite) {
      out.holds = Tri::yes;
      out.lambda = lambda;
      std::ostringstream os;
      os << "integral of lambda^{-pq/(p-q)} over {p > q} finite for lambda = " << lambda;
      out.criterion = os.str();
      return out;
    }
    all_divergent = all_divergent && total.outcome == IntegralOutcome::divergent;
  }
  out.holds = all_divergent ? Tri::no : Tri::indeterminate;
  out.criterion = all_divergent ? "integral of lambda^{-pq/(p-q)} over {p > q} diverges for lambda up to 2^64"
                                : "lambda integrals could not be classified";
  return out;
}

// ---------------------------------------------------------------------------

const Verdict& ClassificationReport::headline() const {
  switch (kind) {
    case Kind::pair: return dss;
    case Kind::left_infinity: return strictly_singular;
    case Kind::right_l1: return weakly_compact;
  }
  return dss;
}

const LimitVerdict* ClassificationReport::limit(const std::string& label) const {
  for (const auto& l : limits)
    if (l.label == label) return &l.verdict;
  return nullptr;
}

namespace {

struct Route {
  Tri value;
  std::string criterion;
};

// Agreement of all decisive routes, else INDETERMINATE.
Verdict join(const std::vector<Route>& routes, std::vector<std::string>& notes) {
  Verdict v;
  std::vector<const Route*> decisive;
  for (const auto& r : routes)
    if (r.value == Tri::yes || r.value == Tri::no) decisive.push_back(&r);
  if (decisive.empty()) {
    v.value = Tri::indeterminate;
    v.criterion = "no route was decisive";
    return v;
  }
  for (const Route* r : decisive) {
    if (r->value != decisive.front()->value) {
      v.value = Tri::indeterminate;
      v.criterion = "routes disagree";
      std::string msg = "route disagreement:";
      for (const Route* d : decisive) msg += " [" + d->criterion + " -> " + to_string(d->value) + "]";
      notes.push_back(msg);
      return v;
    }
  }
  v.value = decisive.front()->value;
  v.criterion = decisive.front()->criterion;
  if (decisive.size() > 1) {
    std::string also;
    for (std::size_t i = 1; i < decisive.size(); ++i) also += (i > 1 ? "; " : "") + decisive[i]->criterion;
    v.criterion += " (agrees: " + also + ")";
  }
  return v;
}

Route from_limit(const LimitVerdict& v, const std::string& label) {
  switch (v.outcome) {
    case LimitOutcome::zero: return {Tri::yes, "endpoint limit of " + label + " is ZERO"};
    case LimitOutcome::positive: return {Tri::no, "endpoint limit of " + label + " is POSITIVE"};
    default: return {Tri::indeterminate, "endpoint limit of " + label + " is INDETERMINATE"};
  }
}

Tri gap_positive(const EssBounds& eb) {
  if (eb.exact) return eb.ess_inf > 1e-9 ? Tri::yes : Tri::no;
  if (eb.ess_inf >= 1e-3) return Tri::yes;
  if (eb.ess_inf <= 1e-9) return Tri::no;
  return Tri::indeterminate;
}

std::string space(const std::string& name) { return "L^" + name; }

void set_compactness(ClassificationReport& r, const Verdict& v) {
  r.dss = v;
  r.l_weakly_compact = v;
  r.m_weakly_compact = v;
}

std::optional<Route> log_holder_route(ClassificationReport& r, const ExponentFunction& p, const ExponentFunction& q,
                                      const GridOptions& grid) {
  if (!p.domain().finite_measure()) return std::nullopt;
  const EssBounds pb = ess_bounds(p, std::nullopt, grid);
  if (!std::isfinite(pb.ess_sup)) return std::nullopt;
  r.log_holder_p = log_holder_constant(p, grid);
  r.log_holder_q = log_holder_constant(q, grid);
  if (!std::isfinite(*r.log_holder_p) || !std::isfinite(*r.log_holder_q)) return std::nullopt;
  const EssBounds gap = ess_bounds(combine(p, &q.function(), DerivedKind::difference, grid), std::nullopt, grid);
  r.gap_ess_inf = gap.ess_inf;
  const Tri t = gap_positive(gap);
  const std::string crit = t == Tri::yes  ? "log-Hoelder exponents with p+ < inf and ess inf(p-q) > 0"
                           : t == Tri::no ? "log-Hoelder exponents with p+ < inf and ess inf(p-q) = 0"
                                          : "log-Hoelder exponents; ess inf(p-q) unresolved";
  return Route{t, crit};
}

}  // namespace

ClassificationReport classify_pair(const ExponentFunction& p, const ExponentFunction& q, const LimitOptions& options) {
  ClassificationReport r;
  r.kind = ClassificationReport::Kind::pair;
  r.source = space(p.name());
  r.target = space(q.name());
  r.domain_measure = p.domain().measure();
  const GridOptions& grid = options.grid;

  const EmbeddingVerdict emb = embedding_holds(p, q, grid);
  r.embedding = {emb.holds, emb.criterion};
  r.equality_measure = emb.comparison.equality_measure;
  if (emb.holds != Tri::yes) {
    const Tri t = emb.holds == Tri::no ? Tri::not_applicable : Tri::indeterminate;
    const Verdict v{t, emb.holds == Tri::no ? "no inclusion" : "inclusion undecided"};
    set_compactness(r, v);
    r.strictly_singular = v;
    r.weakly_compact = {Tri::not_applicable, ""};
    if (emb.holds == Tri::no) r.notes.push_back("no inclusion: " + emb.criterion);
    return r;
  }
  r.strictly_singular = {Tri::no, "inclusions with q <= p are never strictly singular"};
  r.weakly_compact = {Tri::not_applicable, ""};

  const double mu = p.domain().measure();
  if (std::isfinite(mu) && r.equality_measure >= mu * (1.0 - 1e-6)) {
    set_compactness(r, {Tri::not_applicable, "identity inclusion"});
    r.notes.push_back("no DSS question: equality set has full measure; inclusion is the identity");
    return r;
  }
  if (!std::isfinite(mu)) {
    r.dss = {Tri::no, "infinite measure: a valid inclusion is never DSS"};
    r.l_weakly_compact = {Tri::not_applicable, "not covered on infinite measure"};
    r.m_weakly_compact = {Tri::not_applicable, "not covered on infinite measure"};
    r.notes.push_back("witness: disjoint unit-measure blocks (witness infinite)");
    return r;
  }
  if (r.equality_measure > 1e-6 * mu) {
    set_compactness(r, {Tri::no, "equality set {p = q} has positive measure"});
    return r;
  }

  std::vector<Route> routes;
  for (double a : {2.0, std::numbers::e, 10.0}) {
    r.integrals.push_back(exp_integral(q, a));
    if (r.integrals.back().result.outcome == IntegralOutcome::divergent && routes.empty()) {
      std::ostringstream os;
      os << "integral of a^{q*} diverges for a = " << a;
      routes.push_back({Tri::no, os.str()});
    }
  }

  const PiecewiseFunction g = combine(p, &q.function(), DerivedKind::difference_over_product, grid);
  const LimitVerdict main = endpoint_limit(g, options);
  r.limits.push_back({"(p-q)/(pq)", main});
  routes.push_back(from_limit(main, "(p-q)/(pq)"));

  if (auto lh = log_holder_route(r, p, q, grid)) routes.push_back(*lh);

  const LimitVerdict rel = endpoint_limit(combine(p, &q.function(), DerivedKind::relative_gap, grid), options);
  r.limits.push_back({"(p-q)/p", rel});
  if (std::isfinite(ess_bounds(q, std::nullopt, grid).ess_sup)) {
    routes.push_back(from_limit(rel, "(p-q)/p"));
  } else {
    r.notes.push_back("q is unbounded: the endpoint limit of (p-q)/p (" + to_string(rel.outcome) +
                      ") is reported but does not decide DSS");
  }

  set_compactness(r, join(routes, r.notes));
  if (r.dss.value == Tri::indeterminate)
    r.notes.push_back("limit thresholds are engineering constants; see evidence traces");
  return r;
}

ClassificationReport classify_left_infty(const ExponentFunction& p, const LimitOptions& options) {
  ClassificationReport r;
  r.kind = ClassificationReport::Kind::left_infinity;
  r.source = "L^inf";
  r.target = space(p.name());
  r.domain_measure = p.domain().measure();

  if (!p.domain().finite_measure()) {
    Tri in_space = Tri::indeterminate;
    try {
      luxemburg_norm(indicator(p.domain(), IntervalSet{p.domain().span()}), p);
      in_space = Tri::yes;
    } catch (const NotInSpaceError&) {
      in_space = Tri::no;
    } catch (const IndeterminateError&) {
    }
    r.embedding = {in_space, in_space == Tri::yes   ? "the constant 1 lies in L^p"
                             : in_space == Tri::no ? "the constant 1 is not in L^p"
                                                   : "membership of the constant 1 undecided"};
    const Verdict v = in_space == Tri::yes ? Verdict{Tri::no, "infinite measure: L^inf inclusion is never DSS"}
                      : in_space == Tri::no ? Verdict{Tri::not_applicable, "no inclusion"}
                                            : Verdict{Tri::indeterminate, "inclusion undecided"};
    set_compactness(r, {v.value, v.criterion});
    r.l_weakly_compact = r.m_weakly_compact = {v.value == Tri::no ? Tri::not_applicable : v.value, v.criterion};
    r.strictly_singular = v;
    r.weakly_compact = {Tri::not_applicable, ""};
    return r;
  }

  r.embedding = {Tri::yes, "finite measure"};
  std::vector<Route> routes;
  const LimitVerdict main =
      endpoint_limit(combine(p, nullptr, DerivedKind::reciprocal, options.grid), options);
  r.limits.push_back({"1/p", main});
  routes.push_back(from_limit(main, "1/p"));

  const LimitVerdict marc = marcinkiewicz_limit(p, options);
  r.limits.push_back({"marcinkiewicz", marc});
  if (marc.outcome == LimitOutcome::zero) routes.push_back({Tri::yes, "Marcinkiewicz ratio tends to 0"});
  else if (marc.outcome == LimitOutcome::positive) routes.push_back({Tri::no, "Marcinkiewicz ratio bounded away from 0"});

  for (double a : {2.0, std::numbers::e, 10.0}) {
    r.integrals.push_back(exp_integral(p, a));
    if (r.integrals.back().result.outcome == IntegralOutcome::divergent) {
      std::ostringstream os;
      os << "integral of a^{p*} diverges for a = " << a;
      routes.push_back({Tri::no, os.str()});
      break;
    }
  }

  const Verdict v = join(routes, r.notes);
  set_compactness(r, v);
  r.weakly_compact = v;
  r.strictly_singular = v;
  return r;
}

ClassificationReport classify_right_l1(const ExponentFunction& p, const LimitOptions& options) {
  const ExponentFunction one = ExponentFunction::constant(p.domain(), 1.0, "1");
  if (!p.domain().finite_measure()) {
    ClassificationReport r = classify_pair(p, one, options);
    r.kind = ClassificationReport::Kind::right_l1;
    r.weakly_compact = r.dss;
    return r;
  }
  ClassificationReport r;
  r.kind = ClassificationReport::Kind::right_l1;
  r.source = space(p.name());
  r.target = "L^1";
  r.domain_measure = p.domain().measure();
  r.embedding = {Tri::yes, "finite measure"};

  std::vector<Route> routes;
  const LimitVerdict main = endpoint_limit(combine(p, nullptr, DerivedKind::right_gap, options.grid), options);
  r.limits.push_back({"(p-1)/p", main});
  routes.push_back(from_limit(main, "(p-1)/p"));
  if (auto lh = log_holder_route(r, p, one, options.grid)) routes.push_back(*lh);

  const Verdict v = join(routes, r.notes);
  r.dss = v;
  r.weakly_compact = v;
  r.l_weakly_compact = {Tri::not_applicable, ""};
  r.m_weakly_compact = {Tri::not_applicable, ""};
  r.strictly_singular = {Tri::no, "inclusions into L^1 are never strictly singular"};
  return r;
}

}  // namespace vlp
