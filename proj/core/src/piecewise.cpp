#include "vlp/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vlp/error.hpp"

namespace vlp {

namespace {

constexpr double kTiny = 1e-300;

double floor_offset(double endpoint) {
  if (endpoint == 0.0) return kTiny;
  const double ulp = std::nextafter(std::abs(endpoint), kInf) - std::abs(endpoint);
  return std::max(kTiny, 64.0 * ulp);
}

std::vector<double> geometric(double from, double to, std::size_t count) {
  std::vector<double> out;
  if (count == 0 || !(from > to)) return out;
  out.reserve(count);
  const double ratio = std::log(to / from) / static_cast<double>(std::max<std::size_t>(count - 1, 1));
  for (std::size_t j = 0; j < count; ++j) out.push_back(from * std::exp(ratio * static_cast<double>(j)));
  return out;
}

Monotonicity flip(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return Monotonicity::decreasing;
    case Monotonicity::decreasing: return Monotonicity::increasing;
    default: return m;
  }
}

// Monotonicity of a sum of two monotone terms.
Monotonicity sum_rule(Monotonicity a, Monotonicity b) {
  if (a == Monotonicity::unknown || b == Monotonicity::unknown) return Monotonicity::unknown;
  if (a == Monotonicity::constant) return b;
  if (b == Monotonicity::constant) return a;
  return a == b ? a : Monotonicity::unknown;
}

int sign_of_step(double a, double b, double floor) {
  const double tol = std::max(1e-12 * std::max(std::abs(a), std::abs(b)), floor);
  if (b - a > tol) return 1;
  if (a - b > tol) return -1;
  return 0;
}

struct Sample {
  std::vector<double> t;
  std::vector<double> v;
};

Sample finite_sample(const Expr& e, const Interval& span, std::size_t n) {
  Grid g = make_grid(span, n);
  Sample s;
  s.t.reserve(g.t.size());
  s.v.reserve(g.t.size());
  for (double t : g.t) {
    const double v = e(t);
    if (std::isfinite(v)) {
      s.t.push_back(t);
      s.v.push_back(v);
    }
  }
  return s;
}

// Indices (into the sample) where the sign of consecutive differences flips,
// ignoring flat steps. Returns nullopt-like empty + flag when too many.
struct Turns {
  int direction = 0;  // overall direction when no turn
  std::vector<std::pair<std::size_t, int>> at;  // (sample index of last point before the flip, new sign)
};

Turns find_turns(const Sample& s) {
  Turns out;
  // Steps below 1e-12 of the typical magnitude are rounding noise, e.g. the
  // cancellation in p - q where the gap tends to zero.
  double floor = 0.0;
  if (!s.v.empty()) {
    std::vector<double> mag(s.v.size());
    std::transform(s.v.begin(), s.v.end(), mag.begin(), [](double v) { return std::abs(v); });
    std::nth_element(mag.begin(), mag.begin() + mag.size() / 2, mag.end());
    floor = 1e-12 * mag[mag.size() / 2];
  }
  int current = 0;
  std::size_t last_nonflat = 0;
  for (std::size_t i = 0; i + 1 < s.v.size(); ++i) {
    const int sg = sign_of_step(s.v[i], s.v[i + 1], floor);
    if (sg == 0) continue;
    if (current == 0) {
      current = sg;
      out.direction = sg;
    } else if (sg != current) {
      out.at.emplace_back(last_nonflat, sg);
      current = sg;
    }
    last_nonflat = i + 1;
  }
  return out;
}

double golden_extremum(const Expr& e, double a, double b, bool maximum) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { const double v = e(t); return maximum ? v : -v; };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 300 && (b - a) > 1e-15 * std::max({std::abs(a), std::abs(b), kTiny}); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

Monotonicity monotonicity_of_sample(const Sample& s) {
  const Turns turns = find_turns(s);
  if (!turns.at.empty()) return Monotonicity::unknown;
  if (turns.direction > 0) return Monotonicity::increasing;
  if (turns.direction < 0) return Monotonicity::decreasing;
  return Monotonicity::constant;
}

}  // namespace

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "inc";
    case Monotonicity::decreasing: return "dec";
    case Monotonicity::constant: return "const";
    case Monotonicity::unknown: return "unknown";
  }
  return "unknown";
}

Grid make_grid(const Interval& span, std::size_t points) {
  points = std::max<std::size_t>(points, 16);
  std::vector<double> t;
  t.reserve(points + 2);
  if (std::isfinite(span.hi)) {
    const double w = span.length();
    const std::size_t n_uniform = points / 2;
    const std::size_t n_geo = points / 4;
    for (std::size_t i = 0; i < n_uniform; ++i)
      t.push_back(span.lo + (static_cast<double>(i) + 0.5) * w / static_cast<double>(n_uniform));
    const double start = 0.25 * w / static_cast<double>(n_uniform);
    for (double d : geometric(start, std::min(start, floor_offset(span.lo)), n_geo))
      t.push_back(span.lo + d);
    for (double d : geometric(start, std::min(start, floor_offset(span.hi)), n_geo))
      t.push_back(span.hi - d);
  } else {
    const std::size_t n_inner = points / 2;
    const std::size_t n_geo = points / 4;
    for (std::size_t i = 0; i < n_inner; ++i)
      t.push_back(span.lo + (static_cast<double>(i) + 0.5) / static_cast<double>(n_inner));
    const double start = 0.25 / static_cast<double>(n_inner);
    for (double d : geometric(start, std::min(start, floor_offset(span.lo)), n_geo))
      t.push_back(span.lo + d);
    for (double d : geometric(1.0, 1e15, n_geo)) t.push_back(span.lo + 1.0 + d);
  }
  std::erase_if(t, [&](double x) { return !(x > span.lo && x < span.hi); });
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());

  Grid g;
  g.t = std::move(t);
  g.weight.resize(g.t.size());
  for (std::size_t i = 0; i < g.t.size(); ++i) {
    const double left = i == 0 ? span.lo : 0.5 * (g.t[i - 1] + g.t[i]);
    const double right = i + 1 == g.t.size() ? span.hi : 0.5 * (g.t[i] + g.t[i + 1]);
    g.weight[i] = right - left;
  }
  return g;
}

double one_sided_limit(const Expr& e, const Interval& span, bool at_lo) {
  const double x0 = at_lo ? span.lo : span.hi;
  const double v0 = e(x0);

  std::vector<double> seq;
  if (std::isfinite(x0)) {
    const double w = std::isfinite(span.length()) ? span.length() : 1.0;
    const double ulp = x0 == 0.0 ? 0.0 : std::nextafter(std::abs(x0), kInf) - std::abs(x0);
    const double floor = x0 == 0.0 ? kTiny : std::max(kTiny, std::ldexp(ulp, 20));
    for (double d = 0.5 * w; d >= floor; d *= 0.5) seq.push_back(e(at_lo ? x0 + d : x0 - d));
  } else {
    for (double x = std::max(1.0, span.lo + 1.0); x < 1e300; x *= 4.0) seq.push_back(e(x));
  }
  std::erase_if(seq, [](double v) { return std::isnan(v); });
  if (seq.empty()) return v0;
  const double last = seq.back();

  if (std::isinf(v0) && std::isfinite(last) == false && (v0 > 0) == (last > 0)) return v0;
  if (std::isinf(v0) && seq.size() >= 6) {
    bool monotone_towards = true;
    for (std::size_t i = seq.size() - 5; i < seq.size(); ++i)
      monotone_towards = monotone_towards && (v0 > 0 ? seq[i] >= seq[i - 1] : seq[i] <= seq[i - 1]);
    if (monotone_towards) return v0;
  }
  if (std::isfinite(v0) && std::isfinite(last) &&
      std::abs(v0 - last) <= 1e-8 * std::max(1.0, std::abs(v0)))
    return v0;

  // Fall back on the trend of the approach sequence.
  if (std::isinf(last)) return last;
  if (seq.size() >= 10) {
    const std::size_t n = seq.size();
    bool up = true, down = true, steady = true;
    for (std::size_t i = n - 8; i < n; ++i) {
      up = up && seq[i] > seq[i - 1];
      down = down && seq[i] < seq[i - 1];
    }
    for (std::size_t i = n - 6; i < n; ++i) {
      const double inc_now = std::abs(seq[i] - seq[i - 1]);
      const double inc_prev = std::abs(seq[i - 1] - seq[i - 2]);
      steady = steady && inc_now >= 0.7 * inc_prev;
    }
    if ((up || down) && steady && std::abs(last) > 1e6) return up ? kInf : -kInf;
  }
  return last;
}

// ---------------------------------------------------------------------------

PiecewiseFunction::PiecewiseFunction(IntervalDomain domain, std::vector<Piece> pieces, std::string name)
    : domain_(domain), pieces_(std::move(pieces)), name_(std::move(name)) {
  if (pieces_.empty()) throw DomainError("piecewise function needs at least one piece");
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.span.lo < b.span.lo; });
  auto close = [](double a, double b) {
    if (a == b) return true;
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  if (!close(pieces_.front().span.lo, domain_.lo()) || !close(pieces_.back().span.hi, domain_.hi()))
    throw DomainError("pieces of '" + name_ + "' do not cover the domain");
  pieces_.front().span.lo = domain_.lo();
  pieces_.back().span.hi = domain_.hi();
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    auto& p = pieces_[i];
    if (!(p.span.lo < p.span.hi)) throw DomainError("empty piece in '" + name_ + "'");
    if (i + 1 < pieces_.size()) {
      if (!close(p.span.hi, pieces_[i + 1].span.lo))
        throw DomainError("pieces of '" + name_ + "' leave a gap or overlap");
      pieces_[i + 1].span.lo = p.span.hi;
    }
    if (p.expr.is_constant()) {
      p.monotone = Monotonicity::constant;
      p.inferred = false;
    } else if (p.monotone == Monotonicity::constant) {
      // Tagged or inferred constant: fold to the value at an interior point.
      const double mid = std::isfinite(p.span.hi) ? 0.5 * (p.span.lo + p.span.hi) : p.span.lo + 1.0;
      p.expr = Expr::constant(p.expr(mid));
    }
  }
}

PiecewiseFunction PiecewiseFunction::single(IntervalDomain domain, Expr expr, Monotonicity m,
                                            std::string name) {
  return PiecewiseFunction(domain, {Piece{domain.span(), std::move(expr), m, false}}, std::move(name));
}

PiecewiseFunction PiecewiseFunction::steps(IntervalDomain domain, const std::vector<Interval>& spans,
                                           const std::vector<double>& values, std::string name) {
  if (spans.size() != values.size()) throw DomainError("step spans and values differ in length");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < spans.size(); ++i)
    pieces.push_back({spans[i], Expr::constant(values[i]), Monotonicity::constant, false});
  return PiecewiseFunction(domain, std::move(pieces), std::move(name));
}

const Piece& PiecewiseFunction::piece_at(double t) const {
  if (!(t >= domain_.lo() && t <= domain_.hi()))
    throw DomainError("point " + std::to_string(t) + " lies outside the domain of '" + name_ + "'");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double x, const Piece& p) { return x < p.span.lo; });
  if (it == pieces_.begin()) return pieces_.front();
  return *std::prev(it);
}

double PiecewiseFunction::operator()(double t) const { return piece_at(t).expr(t); }

bool PiecewiseFunction::all_monotone() const noexcept {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.monotone != Monotonicity::unknown; });
}

bool PiecewiseFunction::is_step() const noexcept {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.expr.is_constant(); });
}

PiecewiseFunction PiecewiseFunction::renamed(std::string name) const {
  PiecewiseFunction copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ExponentFunction::ExponentFunction(PiecewiseFunction f, const GridOptions& grid) : f_(std::move(f)) {
  for (const auto& piece : f_.pieces()) {
    if (piece.expr.is_constant()) {
      const double c = piece.expr.constant_value();
      if (!(c >= 1.0) || !std::isfinite(c))
        throw RangeError("exponent '" + f_.name() + "' takes value " + std::to_string(c) +
                         " outside [1, inf)");
      continue;
    }
    const Grid g = make_grid(piece.span, std::min<std::size_t>(grid.points_per_piece, 4000));
    for (double t : g.t) {
      const double v = piece.expr(t);
      if (std::isnan(v) || v < 1.0 - 1e-12)
        throw RangeError("exponent '" + f_.name() + "' evaluates to " + std::to_string(v) +
                         " at t = " + std::to_string(t) + "; exponents must satisfy p(t) >= 1");
    }
  }
}

ExponentFunction ExponentFunction::constant(IntervalDomain domain, double value, std::string name) {
  return ExponentFunction(
      PiecewiseFunction::single(domain, Expr::constant(value), Monotonicity::constant, std::move(name)));
}

// ---------------------------------------------------------------------------

EssBounds ess_bounds(const PiecewiseFunction& f, std::optional<Interval> subset, const GridOptions& grid) {
  const Interval window = subset.value_or(f.domain().span());
  if (subset && !(window.lo >= f.domain().lo() && window.hi <= f.domain().hi() && window.lo < window.hi))
    throw DomainError("ess_bounds subset is not a sub-interval of the domain");

  EssBounds out{kInf, -kInf, subset, true};
  for (const auto& piece : f.pieces()) {
    const Interval clip{std::max(piece.span.lo, window.lo), std::min(piece.span.hi, window.hi)};
    if (!(clip.lo < clip.hi)) continue;
    if (piece.monotone == Monotonicity::unknown) {
      out.exact = false;
      const Grid g = make_grid(clip, grid.points_per_piece);
      for (double t : g.t) {
        const double v = piece.expr(t);
        if (std::isnan(v)) continue;
        out.ess_inf = std::min(out.ess_inf, v);
        out.ess_sup = std::max(out.ess_sup, v);
      }
      continue;
    }
    const double left = clip.lo == piece.span.lo ? one_sided_limit(piece.expr, piece.span, true)
                                                 : piece.expr(clip.lo);
    const double right = clip.hi == piece.span.hi ? one_sided_limit(piece.expr, piece.span, false)
                                                  : piece.expr(clip.hi);
    out.ess_inf = std::min({out.ess_inf, left, right});
    out.ess_sup = std::max({out.ess_sup, left, right});
  }
  return out;
}

ComparisonReport pointwise_compare(const ExponentFunction& p, const ExponentFunction& q,
                                   const GridOptions& grid) {
  if (!(p.domain() == q.domain())) throw DomainError("pointwise_compare: exponents live on different domains");
  const PiecewiseFunction gap = combine(p, &q.function(), DerivedKind::difference, grid);

  ComparisonReport out;
  out.q_le_p = true;
  out.min_gap = kInf;
  for (const auto& piece : gap.pieces()) {
    const Grid g = make_grid(piece.span, grid.points_per_piece);
    for (std::size_t i = 0; i < g.t.size(); ++i) {
      const double d = piece.expr(g.t[i]);
      if (std::isnan(d)) continue;
      const double scale = std::max(1.0, std::abs(p.function()(g.t[i])));
      out.min_gap = std::min(out.min_gap, d);
      if (d < -1e-10 * scale) out.q_le_p = false;
      if (piece.monotone == Monotonicity::unknown && std::abs(d) < 1e-10 * scale)
        out.equality_measure += g.weight[i];
    }
    if (piece.monotone == Monotonicity::unknown) continue;
    const double lo = one_sided_limit(piece.expr, piece.span, true);
    const double hi = one_sided_limit(piece.expr, piece.span, false);
    if (std::min(lo, hi) < -1e-9 * std::max(1.0, std::abs(std::max(lo, hi)))) out.q_le_p = false;
    out.min_gap = std::min({out.min_gap, lo, hi});
    // A monotone gap vanishing at both ends vanishes on the whole piece;
    // otherwise its zero set is at most a point.
    if (std::abs(lo) <= 1e-12 && std::abs(hi) <= 1e-12) out.equality_measure += piece.span.length();
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(DerivedKind k) {
  switch (k) {
    case DerivedKind::conjugate: return "p/(p-1)";
    case DerivedKind::difference_over_product: return "(p-q)/(pq)";
    case DerivedKind::product_over_difference: return "pq/(p-q)";
    case DerivedKind::relative_gap: return "(p-q)/p";
    case DerivedKind::reciprocal: return "1/p";
    case DerivedKind::right_gap: return "(p-1)/p";
    case DerivedKind::difference: return "p-q";
  }
  return "?";
}

bool needs_second_argument(DerivedKind k) {
  return k == DerivedKind::difference_over_product || k == DerivedKind::product_over_difference ||
         k == DerivedKind::relative_gap || k == DerivedKind::difference;
}

std::vector<Piece> infer_monotone_pieces(const Expr& e, const Interval& span, const GridOptions& grid) {
  const Piece unknown{span, e, Monotonicity::unknown, false};
  if (e.is_constant()) return {Piece{span, e, Monotonicity::constant, false}};
  const Sample s = finite_sample(e, span, grid.points_per_piece);
  if (s.v.size() < 8) return {unknown};
  const Turns turns = find_turns(s);
  if (turns.at.empty()) {
    const Monotonicity m = turns.direction > 0   ? Monotonicity::increasing
                           : turns.direction < 0 ? Monotonicity::decreasing
                                                 : Monotonicity::constant;
    return {Piece{span, e, m, true}};
  }
  constexpr std::size_t kMaxTurns = 8;
  if (turns.at.size() > kMaxTurns) return {unknown};

  std::vector<double> cuts{span.lo};
  for (const auto& [idx, new_sign] : turns.at) {
    const double a = idx == 0 ? span.lo : s.t[idx - 1];
    const double b = idx + 1 < s.t.size() ? s.t[idx + 1] : span.hi;
    const double tau = golden_extremum(e, a, b, new_sign < 0);
    if (tau > cuts.back()) cuts.push_back(tau);
  }
  cuts.push_back(span.hi);

  std::vector<Piece> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval sub{cuts[i], cuts[i + 1]};
    if (!(sub.lo < sub.hi)) continue;
    const Sample check = finite_sample(e, sub, std::max<std::size_t>(grid.points_per_piece / 4, 256));
    const Monotonicity m = monotonicity_of_sample(check);
    if (m == Monotonicity::unknown) return {unknown};
    out.push_back(Piece{sub, e, m, true});
  }
  return out;
}

PiecewiseFunction combine(const PiecewiseFunction& p, const PiecewiseFunction* q, DerivedKind kind,
                          const GridOptions& grid) {
  if (needs_second_argument(kind) && q == nullptr)
    throw PreconditionError("combine " + to_string(kind) + " needs a second exponent");
  if (q && !(q->domain() == p.domain())) throw DomainError("combine: functions live on different domains");

  std::vector<double> cuts;
  for (const auto& piece : p.pieces()) cuts.push_back(piece.span.lo);
  if (q && needs_second_argument(kind))
    for (const auto& piece : q->pieces()) cuts.push_back(piece.span.lo);
  cuts.push_back(p.domain().hi());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const Expr one = Expr::constant(1.0);
  std::vector<Piece> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval sub{cuts[i], cuts[i + 1]};
    const double mid = std::isfinite(sub.hi) ? 0.5 * (sub.lo + sub.hi) : sub.lo + 1.0;
    const Piece& pp = p.piece_at(mid);
    const Piece* qq = (q && needs_second_argument(kind)) ? &q->piece_at(mid) : nullptr;
    const Expr P = pp.expr;
    const Expr Q = qq ? qq->expr : one;
    const Monotonicity mp = pp.monotone;
    const Monotonicity mq = qq ? qq->monotone : Monotonicity::constant;

    Expr e;
    Monotonicity m = Monotonicity::unknown;
    switch (kind) {
      case DerivedKind::conjugate:
        if (P.is_constant() && P.constant_value() == 1.0)
          throw PreconditionError("conjugate exponent undefined where p = 1");
        e = P / (P - one);
        m = flip(mp);
        break;
      case DerivedKind::reciprocal:
        e = one / P;
        m = flip(mp);
        break;
      case DerivedKind::right_gap:
        e = (P - one) / P;
        m = mp;
        break;
      case DerivedKind::difference:
        e = P - Q;
        m = sum_rule(mp, flip(mq));
        break;
      case DerivedKind::difference_over_product:
        e = (P - Q) / (P * Q);
        m = sum_rule(flip(mq), mp);
        break;
      case DerivedKind::product_over_difference: {
        const Expr gap = P - Q;
        if (gap.is_constant() && gap.constant_value() == 0.0)
          throw PreconditionError("pq/(p-q) undefined: p = q on a set of positive measure");
        e = (P * Q) / gap;
        m = flip(sum_rule(flip(mq), mp));
        break;
      }
      case DerivedKind::relative_gap:
        e = (P - Q) / P;
        m = flip(sum_rule(mq, flip(mp)));
        break;
    }

    if (e.is_constant()) {
      out.push_back(Piece{sub, e, Monotonicity::constant, false});
    } else if (m != Monotonicity::unknown) {
      out.push_back(Piece{sub, e, m, false});
    } else if (mp != Monotonicity::unknown && mq != Monotonicity::unknown) {
      for (auto& piece : infer_monotone_pieces(e, sub, grid)) out.push_back(std::move(piece));
    } else {
      out.push_back(Piece{sub, e, Monotonicity::unknown, false});
    }
  }

  if (kind == DerivedKind::conjugate || kind == DerivedKind::product_over_difference) {
    // Denominator vanishing on a sampled set of positive measure.
    for (const auto& piece : out) {
      if (piece.expr.is_constant()) {
        if (!std::isfinite(piece.expr.constant_value()))
          throw PreconditionError("combine " + to_string(kind) + ": denominator vanishes on a piece");
        continue;
      }
      const Grid g = make_grid(piece.span, std::min<std::size_t>(grid.points_per_piece, 2000));
      double bad = 0.0, total = 0.0;
      for (std::size_t i = 0; i < g.t.size(); ++i) {
        total += g.weight[i];
        if (!std::isfinite(piece.expr(g.t[i]))) bad += g.weight[i];
      }
      if (std::isfinite(total) && bad > 1e-3 * total)
        throw PreconditionError("combine " + to_string(kind) + ": denominator vanishes on a set of positive measure");
    }
  }

  std::string name = to_string(kind);
  return PiecewiseFunction(p.domain(), std::move(out), name);
}

}  // namespace vlp

namespace vlp {

PiecewiseFunction indicator(const IntervalDomain& domain, const IntervalSet& set, double height,
                            std::string name) {
  std::vector<Interval> spans;
  std::vector<double> values;
  double cursor = domain.lo();
  const IntervalSet inside = set.intersect(IntervalSet{domain.span()});
  for (const Interval& part : inside.parts()) {
    if (part.lo > cursor) {
      spans.push_back({cursor, part.lo});
      values.push_back(0.0);
    }
    spans.push_back(part);
    values.push_back(height);
    cursor = part.hi;
  }
  if (cursor < domain.hi()) {
    spans.push_back({cursor, domain.hi()});
    values.push_back(0.0);
  }
  return PiecewiseFunction::steps(domain, spans, values, std::move(name));
}

PiecewiseFunction scaled(const PiecewiseFunction& f, double c) {
  std::vector<Piece> pieces;
  const Expr k = Expr::constant(c);
  for (const auto& piece : f.pieces()) {
    Monotonicity m = piece.monotone;
    if (c == 0.0) m = Monotonicity::constant;
    else if (c < 0.0) m = flip(m);
    pieces.push_back(Piece{piece.span, k * piece.expr, m, piece.inferred});
  }
  return PiecewiseFunction(f.domain(), std::move(pieces), f.name());
}

}  // namespace vlp
