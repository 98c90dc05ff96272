#include "vlp/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "vlp/error.hpp"
#include "vlp/modular.hpp"
#include "vlp/rearrangement.hpp"

namespace vlp {

std::string Space::name() const { return exponent ? "L^" + exponent->name() : "L^inf"; }

std::string to_string(WitnessKind k) { return k == WitnessKind::indicator ? "indicator" : "normalized"; }

namespace {

// First point of `span` where a monotone predicate switches value.
double switch_point(const Interval& span, const std::function<bool(double)>& pred_at_hi_side) {
  double a = span.lo, b = span.hi;
  for (int it = 0; it < 1100; ++it) {
    const double m = a + 0.5 * (b - a);
    if (!(m > a && m < b)) break;
    (pred_at_hi_side(m) ? b : a) = m;
  }
  return b;
}

// {t : f(t) > s} (strict) or {t : f(t) >= s} on a function with monotone pieces.
IntervalSet superlevel(const PiecewiseFunction& f, double s, bool strict) {
  auto holds = [&](double v) { return strict ? v > s : v >= s; };
  std::vector<Interval> parts;
  for (const auto& piece : f.pieces()) {
    const Interval& span = piece.span;
    if (piece.monotone == Monotonicity::constant) {
      if (holds(piece.expr.constant_value())) parts.push_back(span);
      continue;
    }
    if (piece.monotone == Monotonicity::unknown)
      throw PreconditionError("level sets need monotone pieces; piece on (" + std::to_string(span.lo) + ", " +
                              std::to_string(span.hi) + ") is not");
    const double lim_lo = one_sided_limit(piece.expr, span, true);
    const double lim_hi = one_sided_limit(piece.expr, span, false);
    if (piece.monotone == Monotonicity::increasing) {
      if (holds(lim_lo)) parts.push_back(span);
      else if (holds(lim_hi))
        parts.push_back({switch_point(span, [&](double t) { return holds(piece.expr(t)); }), span.hi});
    } else {
      if (holds(lim_hi)) parts.push_back(span);
      else if (holds(lim_lo))
        parts.push_back({span.lo, switch_point(span, [&](double t) { return !holds(piece.expr(t)); })});
    }
  }
  return IntervalSet(std::move(parts));
}

// {t : lo <= f(t) <= hi}.
IntervalSet band(const PiecewiseFunction& f, double lo, double hi) {
  return superlevel(f, lo, false).subtract(superlevel(f, hi, true));
}

IntervalSet leftmost(const IntervalSet& set, double measure) {
  std::vector<Interval> out;
  double left = measure;
  for (const auto& part : set.parts()) {
    if (left <= 0.0) break;
    const double take = std::min(left, part.length());
    out.push_back({part.lo, part.lo + take});
    left -= take;
  }
  return IntervalSet(std::move(out));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

PiecewiseFunction WitnessSequence::function(std::size_t n) const {
  if (n >= elements.size()) throw DomainError("witness element index out of range");
  const IntervalSet& set = elements[n].set;
  if (kind == WitnessKind::indicator) return indicator(domain, set, 1.0, "f" + std::to_string(n + 1));

  const PiecewiseFunction& p = normalizer->function();
  std::vector<double> cuts{domain.lo(), domain.hi()};
  for (const auto& piece : p.pieces()) cuts.push_back(piece.span.lo);
  for (const auto& part : set.parts()) {
    cuts.push_back(part.lo);
    cuts.push_back(part.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const Expr mass = Expr::constant(set.measure());
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval sub{cuts[i], cuts[i + 1]};
    const double mid = std::isfinite(sub.hi) ? 0.5 * (sub.lo + sub.hi) : sub.lo + 1.0;
    if (!set.contains(mid)) {
      pieces.push_back({sub, Expr::constant(0.0), Monotonicity::constant, false});
      continue;
    }
    const Piece& pp = p.piece_at(mid);
    pieces.push_back({sub, Expr::binary(Op::pow, mass, Expr::constant(-1.0) / pp.expr), Monotonicity::unknown, false});
  }
  return PiecewiseFunction(domain, std::move(pieces), "s" + std::to_string(n + 1));
}

bool WitnessSequence::disjoint() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (!elements[i].set.disjoint_from(elements[j].set)) return false;
  return true;
}

WitnessSequence level_set_witness(const ExponentFunction& r, double a, std::size_t count,
                                  const LimitOptions& options) {
  if (!r.domain().finite_measure()) throw PreconditionError("level-set witness needs a finite-measure domain");
  if (!(a > 1.0)) throw PreconditionError("level-set witness needs a > 1");
  if (!r.function().all_monotone()) throw PreconditionError("level-set witness needs monotone pieces");
  const ExpIntegral ei = exp_integral(r, a);
  if (ei.result.outcome != IntegralOutcome::divergent)
    throw PreconditionError("integral of a^r is " + to_string(ei.result.outcome) + " for a = " + fmt(a) +
                            "; the level-set witness needs it divergent");

  const RearrangedFunction rs = rearrange(r, {options.grid, std::nullopt});
  const double la = std::log(a);
  auto mass = [&](double lo, double hi) {
    return gauss_kronrod([&](double x) { return std::exp(la * rs(x)); }, lo, hi, 1e-10, nullptr, 400);
  };

  WitnessSequence w;
  w.kind = WitnessKind::indicator;
  w.domain = r.domain();
  w.base = a;
  w.beta = 0.98 / a;
  const double b = r.domain().measure();
  const double tol = 1e-10 * std::max(1.0, b);

  // t_1 = b; each next cut carries integral 1.5 of a^{r*} on (t_{n+1}, t_n).
  w.cuts.push_back(b);
  for (std::size_t n = 0; n < count; ++n) {
    const double tn = w.cuts.back();
    double lo = 0.5 * tn;
    while (mass(lo, tn) < 1.5) {
      lo *= 0.5;
      if (lo < 1e-300) throw WitnessError("level-set witness: no cut below " + fmt(tn) + " carries mass 1.5");
    }
    double hi = tn;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
      const double m = std::sqrt(lo) * std::sqrt(hi);
      (mass(m, tn) >= 1.5 ? lo : hi) = m;
    }
    w.cuts.push_back(lo);
  }

  // F_n = {r >= r*(t_n)} with ties resolved left-first to measure t_n.
  auto realize = [&](double t) {
    if (t >= b) return IntervalSet{r.domain().span()};
    const double level = rs(t);
    const IntervalSet above = superlevel(r, level, true);
    const IntervalSet at_least = superlevel(r, level, false);
    IntervalSet f = at_least;
    if (at_least.measure() > t + tol) f = above.unite(leftmost(at_least.subtract(above), t - above.measure()));
    if (std::abs(f.measure() - t) > tol)
      throw WitnessError("level-set witness: superlevel set has measure " + fmt(f.measure()) + ", wanted " + fmt(t));
    return f;
  };
  IntervalSet outer = realize(w.cuts[0]);
  for (std::size_t n = 0; n < count; ++n) {
    const IntervalSet inner = realize(w.cuts[n + 1]);
    if (inner.subtract(outer).measure() > tol) throw WitnessError("level-set witness: superlevel sets are not nested");
    WitnessElement e;
    e.set = outer.subtract(inner);
    e.source_norm = 1.0;
    e.target_norm = char_norm(e.set, r).value;
    if (e.target_norm < w.beta - 1e-6)
      throw WitnessError("level-set witness: norm " + fmt(e.target_norm) + " of element " + std::to_string(n + 1) +
                         " is below beta = " + fmt(w.beta));
    w.elements.push_back(std::move(e));
    outer = inner;
  }
  if (!w.disjoint()) throw WitnessError("level-set witness: sets overlap");
  return w;
}

WitnessSequence dss_failure_witness(const ExponentFunction& p, const ExponentFunction& q, std::size_t count,
                                    const LimitOptions& options) {
  if (!p.domain().finite_measure()) throw PreconditionError("band witness needs a finite-measure domain");
  const PiecewiseFunction g = combine(p, &q.function(), DerivedKind::difference_over_product, options.grid);
  const LimitVerdict limit = endpoint_limit(g, options);
  if (limit.outcome != LimitOutcome::positive)
    throw PreconditionError("endpoint limit of (p-q)/(pq) is " + to_string(limit.outcome) + "; no band witness");
  if (!g.all_monotone()) throw PreconditionError("band witness needs (p-q)/(pq) with monotone pieces");

  const RearrangedFunction gs = rearrange(g, {options.grid, std::nullopt});
  const double b = p.domain().measure();

  WitnessSequence w;
  w.kind = WitnessKind::normalized;
  w.domain = p.domain();
  w.normalizer = p;

  // Offsets d_n = b - x_n with d_{n+1} <= d_n / 4, so x_{n+1} > (x_n + b)/2.
  for (const auto& s : limit.evidence) {
    if (w.offsets.size() == count) break;
    if (s.offset > b / 8.0) continue;
    if (!w.offsets.empty() && s.offset > w.offsets.back() / 4.0) continue;
    w.offsets.push_back(s.offset);
    w.limit_values.push_back(std::exp(s.log_value));
  }
  if (w.offsets.size() < count)
    throw WitnessError("band witness: only " + std::to_string(w.offsets.size()) + " separated samples available");

  for (std::size_t n = 0; n < count; ++n) {
    const double d = w.offsets[n];
    const double hi = gs.at_end_offset(d);
    const double lo = gs.at_end_offset(0.5 * d);
    IntervalSet set = band(g, lo, hi);
    if (!(set.measure() > 0.0))
      throw WitnessError("band witness: band [" + fmt(lo) + ", " + fmt(hi) + "] has measure zero");
    if (set.measure() >= 1.0) set = leftmost(set, 0.5);
    w.elements.push_back({std::move(set), 0.0, 0.0});
  }
  if (!w.disjoint()) throw WitnessError("band witness: bands overlap");

  for (std::size_t n = 0; n < count; ++n) {
    const PiecewiseFunction s = w.function(n);
    w.elements[n].source_norm = luxemburg_norm(s, p).value;
    w.elements[n].target_norm = luxemburg_norm(s, q).value;
    if (std::abs(w.elements[n].source_norm - 1.0) > 1e-6)
      throw WitnessError("band witness: element " + std::to_string(n + 1) + " has norm " +
                         fmt(w.elements[n].source_norm));
  }
  return w;
}

WitnessSequence infinite_measure_witness(const ExponentFunction& p, const ExponentFunction& q, std::size_t count,
                                         const GridOptions& grid) {
  if (p.domain().finite_measure()) throw PreconditionError("block witness needs an infinite-measure domain");
  const EmbeddingVerdict emb = embedding_holds(p, q, grid);
  if (emb.holds != Tri::yes) throw PreconditionError("no inclusion to witness: " + emb.criterion);

  const PiecewiseFunction gap = combine(p, &q.function(), DerivedKind::difference, grid);
  const Interval tail{p.function().pieces().back().span.lo, kInf};
  const bool bounded = std::isfinite(ess_bounds(p, tail, grid).ess_sup);
  const bool unbounded_q = !std::isfinite(ess_bounds(q, tail, grid).ess_sup);

  WitnessSequence w;
  w.kind = WitnessKind::indicator;
  w.domain = p.domain();
  const double start = p.domain().lo();
  auto advance = [](double s) { return s + std::max(1.0, std::abs(s)); };
  constexpr double kFar = 1e15;

  if (bounded) {
    w.branch = 'a';
    double s = start;
    for (std::size_t n = 1; n <= count; ++n) {
      const double eps = 1.0 / static_cast<double>(n);
      for (;;) {
        if (s > kFar) throw WitnessError("block witness: no unit block with gap below " + fmt(eps));
        const Interval blk{s, s + 1.0};
        const double p_sup = ess_bounds(p, blk, grid).ess_sup;
        const double q_inf = ess_bounds(q, blk, grid).ess_inf;
        const double g_sup = ess_bounds(gap, blk, grid).ess_sup;
        if (p_sup - q_inf <= eps && g_sup < 0.5 * eps) {
          w.gaps.push_back(p_sup - q_inf);
          w.elements.push_back({IntervalSet{blk}, 0.0, 0.0});
          s += 1.0;
          break;
        }
        s = advance(s);
      }
    }
  } else if (unbounded_q) {
    w.branch = 'b';
    double s = start;
    auto block_bounds = [&](double at) {
      const Interval blk{at, at + 1.0};
      return std::pair{ess_bounds(p, blk, grid), ess_bounds(q, blk, grid)};
    };
    auto [pb, qb] = block_bounds(s);
    while (!std::isfinite(pb.ess_sup)) {
      s = advance(s);
      if (s > kFar) throw WitnessError("block witness: p is unbounded on every unit block");
      std::tie(pb, qb) = block_bounds(s);
    }
    double level = std::max(1.0, std::floor(qb.ess_inf));
    for (std::size_t k = 0; k < count; ++k) {
      w.levels.push_back(level);
      w.gaps.push_back(pb.ess_sup - qb.ess_inf);
      w.elements.push_back({IntervalSet{{s, s + 1.0}}, 0.0, 0.0});
      if (!(level <= qb.ess_inf + 1e-9 && qb.ess_inf <= pb.ess_inf + 1e-9 && qb.ess_sup <= pb.ess_sup + 1e-9))
        throw WitnessError("block witness: sandwich bounds fail on block " + std::to_string(k + 1));
      double next = std::ceil(pb.ess_sup);
      if (next <= level) next = level + 1.0;
      level = next;
      if (k + 1 == count) break;
      s += 1.0;
      std::tie(pb, qb) = block_bounds(s);
      while (!(qb.ess_inf >= level) || !std::isfinite(pb.ess_sup)) {
        s = advance(s);
        if (s > kFar) throw WitnessError("block witness: q never exceeds level " + fmt(level));
        std::tie(pb, qb) = block_bounds(s);
      }
    }
    w.levels.push_back(level);
  } else {
    throw WitnessError("block witness: inclusion holds but neither a bounded tail of p nor an unbounded q was found");
  }

  for (auto& e : w.elements) {
    e.source_norm = char_norm(e.set, p).value;
    e.target_norm = char_norm(e.set, q).value;
  }
  if (!w.disjoint()) throw WitnessError("block witness: blocks overlap");

  // Exponent values on consecutive unit blocks as Nakano sequences.
  w.nakano = nakano_equivalent([&](std::size_t n) { return p(start + static_cast<double>(n) - 0.5); },
                               [&](std::size_t n) { return q(start + static_cast<double>(n) - 0.5); });
  return w;
}

// ---------------------------------------------------------------------------

namespace {

struct Node {
  std::size_t element;
  double weight;
  double value;  // f_n at the node
  double src;    // exponent of the source space at the node (unused for L^inf)
  double tgt;
};

// Gauss-Legendre nodes and weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(unsigned n) {
  std::vector<std::pair<double, double>> out;
  for (unsigned i = 1; i <= n; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double pn = std::legendre(n, x), pm = std::legendre(n - 1, x);
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double pn = std::legendre(n, x), pm = std::legendre(n - 1, x);
    dp = n * (x * pn - pm) / (x * x - 1.0);
    out.emplace_back(x, 2.0 / ((1.0 - x * x) * dp * dp));
  }
  return out;
}

double space_norm(const std::vector<Node>& nodes, const std::vector<double>& c, bool infinity, bool use_src) {
  if (infinity) {
    double m = 0.0;
    for (const auto& nd : nodes) m = std::max(m, std::abs(c[nd.element] * nd.value));
    return m;
  }
  auto rho = [&](double lambda) {
    double s = 0.0;
    for (const auto& nd : nodes) {
      const double v = std::abs(c[nd.element] * nd.value) / lambda;
      if (v > 0.0) s += nd.weight * std::exp((use_src ? nd.src : nd.tgt) * std::log(v));
    }
    return s;
  };
  double lo = 1.0, hi = 1.0;
  if (rho(1.0) > 1.0) {
    while (rho(hi) > 1.0) hi *= 2.0;
    lo = hi / 2.0;
  } else {
    while (rho(lo) <= 1.0) {
      lo /= 2.0;
      if (lo < 1e-300) return 0.0;
    }
    hi = lo * 2.0;
  }
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-12; ++it) {
    const double m = std::sqrt(lo) * std::sqrt(hi);
    (rho(m) > 1.0 ? lo : hi) = m;
  }
  return hi;
}

}  // namespace

SectionReport section_equivalence_check(const WitnessSequence& w, const Space& source, const Space& target,
                                        std::size_t trials, std::uint64_t seed) {
  const std::size_t n = w.elements.size();
  if (n == 0) throw PreconditionError("section check needs a non-empty witness");
  for (const Space* s : {&source, &target})
    if (s->exponent && !(s->exponent->domain() == w.domain))
      throw DomainError("section check: space " + s->name() + " lives on a different domain");

  // Composite 8-point Gauss-Legendre on 16 cells per interval, geometric
  // when the interval spans more than a factor 4 away from 0.
  static const auto gl = gauss_legendre(8);
  std::vector<Node> nodes;
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& part : w.elements[k].set.parts()) {
      const bool geometric = part.lo > 0.0 && part.hi / part.lo > 4.0;
      constexpr int kCells = 16;
      for (int i = 0; i < kCells; ++i) {
        const double a = geometric ? part.lo * std::pow(part.hi / part.lo, static_cast<double>(i) / kCells)
                                   : part.lo + part.length() * i / kCells;
        const double b = geometric ? part.lo * std::pow(part.hi / part.lo, static_cast<double>(i + 1) / kCells)
                                   : part.lo + part.length() * (i + 1) / kCells;
        for (const auto& [x, wt] : gl) {
          const double t = 0.5 * (a + b) + 0.5 * (b - a) * x;
          Node nd{k, 0.5 * (b - a) * wt, 1.0, 0.0, 0.0};
          if (w.kind == WitnessKind::normalized)
            nd.value = std::exp(-std::log(w.elements[k].set.measure()) / (*w.normalizer)(t));
          if (source.exponent) nd.src = (*source.exponent)(t);
          if (target.exponent) nd.tgt = (*target.exponent)(t);
          nodes.push_back(nd);
        }
      }
    }
  }

  std::vector<std::vector<double>> vectors;
  for (std::size_t k = 0; k < n && vectors.size() < trials; ++k) {
    std::vector<double> c(n, 0.0);
    c[k] = 1.0;
    vectors.push_back(std::move(c));
  }
  for (double ratio : {0.5, 2.0}) {
    if (vectors.size() >= trials) break;
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = std::pow(ratio, static_cast<double>(k));
    vectors.push_back(std::move(c));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  while (vectors.size() < trials) {
    std::vector<double> c(n);
    double len = 0.0;
    for (auto& x : c) {
      x = normal(rng);
      len += x * x;
    }
    if (len == 0.0) continue;
    for (auto& x : c) x /= std::sqrt(len);
    vectors.push_back(std::move(c));
  }

  SectionReport out;
  out.min_ratio = kInf;
  out.max_ratio = 0.0;
  for (auto& c : vectors) {
    const double ns = space_norm(nodes, c, !source.exponent, true);
    const double nt = space_norm(nodes, c, !target.exponent, false);
    const double ratio = ns / nt;
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
      std::ostringstream os;
      os << "section check: norm failure for coefficients (";
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? ", " : "") << c[k];
      os << "): " << ns << " / " << nt;
      throw WitnessError(os.str());
    }
    out.ratios.push_back(ratio);
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

}  // namespace vlp
