#include "vlp/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "vlp/error.hpp"
#include "vlp/quadrature.hpp"

namespace vlp {

namespace {

double offset_floor(double x0) {
  if (x0 == 0.0) return 1e-300;
  const double ulp = std::nextafter(std::abs(x0), kInf) - std::abs(x0);
  return std::max(1e-300, ulp);
}

// sup{d in (0, dmax) : pred(d)} for a predicate that holds near 0 and fails
// beyond a single crossing.
template <class Pred>
double crossing_offset(Pred pred, double floor, double dmax) {
  if (!pred(floor)) return 0.0;
  double lo = floor;
  double hi = dmax;
  if (std::isinf(dmax)) {
    hi = std::max(1.0, 2.0 * floor);
    while (pred(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) return kInf;
    }
  } else if (pred(dmax)) {
    return dmax;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = hi > 4.0 * lo ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Level {
  Piece piece;
  double lim_lo = 0.0;
  double lim_hi = 0.0;
  // Unknown pieces: cell values sorted descending with weights.
  std::vector<double> values;
  std::vector<double> prefix;  // prefix[k] = sum of weights of cells 0..k-1
  double total = 0.0;
};

Level make_level(const Piece& piece, const GridOptions& grid) {
  Level lv;
  lv.piece = piece;
  if (piece.monotone != Monotonicity::unknown) {
    lv.lim_lo = one_sided_limit(piece.expr, piece.span, true);
    lv.lim_hi = one_sided_limit(piece.expr, piece.span, false);
    return lv;
  }
  const Grid g = make_grid(piece.span, grid.points_per_piece);
  std::vector<std::pair<double, double>> cells;
  for (std::size_t i = 0; i < g.t.size(); ++i) {
    const double v = piece.expr(g.t[i]);
    if (!std::isnan(v)) cells.emplace_back(std::max(v, 0.0), g.weight[i]);
  }
  std::sort(cells.begin(), cells.end(), [](auto& a, auto& b) { return a.first > b.first; });
  lv.prefix.push_back(0.0);
  for (auto& [v, w] : cells) {
    lv.values.push_back(v);
    lv.prefix.push_back(lv.prefix.back() + w);
  }
  lv.total = lv.prefix.back();
  return lv;
}

// |{t in piece : f(t) > s}|
double above(const Level& lv, double s) {
  const Piece& p = lv.piece;
  const double len = p.span.length();
  switch (p.monotone) {
    case Monotonicity::constant:
      return p.expr(std::isfinite(p.span.hi) ? 0.5 * (p.span.lo + p.span.hi) : p.span.lo + 1.0) > s ? len : 0.0;
    case Monotonicity::increasing:
      if (lv.lim_lo > s) return len;
      if (!(lv.lim_hi > s)) return 0.0;
      if (std::isinf(p.span.hi)) return kInf;
      return crossing_offset([&](double d) { return p.expr(p.span.hi - d) > s; }, offset_floor(p.span.hi), len);
    case Monotonicity::decreasing:
      if (lv.lim_hi > s) return len;
      if (!(lv.lim_lo > s)) return 0.0;
      return crossing_offset([&](double d) { return p.expr(p.span.lo + d) > s; }, offset_floor(p.span.lo), len);
    case Monotonicity::unknown: {
      // Count of cells with value > s.
      const auto it = std::partition_point(lv.values.begin(), lv.values.end(), [&](double v) { return v > s; });
      return lv.prefix[static_cast<std::size_t>(it - lv.values.begin())];
    }
  }
  return 0.0;
}

// |{t in piece : f(t) <= s}|
double below(const Level& lv, double s) {
  const Piece& p = lv.piece;
  const double len = p.span.length();
  switch (p.monotone) {
    case Monotonicity::constant:
    case Monotonicity::unknown: {
      if (p.monotone == Monotonicity::unknown) {
        const auto it = std::partition_point(lv.values.begin(), lv.values.end(), [&](double v) { return v > s; });
        return lv.total - lv.prefix[static_cast<std::size_t>(it - lv.values.begin())];
      }
      return len - above(lv, s);
    }
    case Monotonicity::increasing:
      if (!(lv.lim_lo <= s)) return 0.0;
      if (lv.lim_hi <= s) return len;
      return crossing_offset([&](double d) { return p.expr(p.span.lo + d) <= s; }, offset_floor(p.span.lo), len);
    case Monotonicity::decreasing:
      if (!(lv.lim_hi <= s)) return 0.0;
      if (lv.lim_lo <= s) return len;
      if (std::isinf(p.span.hi)) return kInf;
      return crossing_offset([&](double d) { return p.expr(p.span.hi - d) <= s; }, offset_floor(p.span.hi), len);
  }
  return 0.0;
}

// Smallest s in [s_lo, s_hi] with q(s) true; q is monotone false -> true.
template <class Q>
double smallest_true(Q q, double s_lo, double s_hi) {
  if (std::isinf(s_hi)) {
    double s = std::max(1.0, 2.0 * std::abs(s_lo));
    while (!q(s)) {
      s_lo = s;
      s *= 2.0;
      if (s > 1e300) return kInf;
    }
    s_hi = s;
  }
  if (q(s_lo)) return s_lo;
  if (s_lo <= 0.0) {
    if (q(1e-300)) return 0.0;
    s_lo = 1e-300;
  }
  for (int it = 0; it < 300 && s_hi - s_lo > 1e-15 * s_hi; ++it) {
    const double mid = s_hi > 4.0 * s_lo && s_lo > 0.0 ? std::sqrt(s_lo) * std::sqrt(s_hi) : 0.5 * (s_lo + s_hi);
    if (!(mid > s_lo && mid < s_hi)) break;
    (q(mid) ? s_hi : s_lo) = mid;
  }
  return s_hi;
}

void check_nonnegative(const PiecewiseFunction& f, const GridOptions& grid) {
  for (const auto& piece : f.pieces()) {
    const Grid g = make_grid(piece.span, std::min<std::size_t>(grid.points_per_piece, 2000));
    for (double t : g.t) {
      const double v = piece.expr(t);
      if (v < -1e-12 * std::max(1.0, std::abs(v)))
        throw RangeError("rearrangement needs f >= 0; '" + f.name() + "' is " + std::to_string(v) +
                         " at t = " + std::to_string(t));
    }
  }
}

}  // namespace

std::string to_string(RearrangeMode m) {
  switch (m) {
    case RearrangeMode::exact: return "exact";
    case RearrangeMode::monotone_inversion: return "monotone-inversion";
    case RearrangeMode::numeric: return "numeric";
  }
  return "?";
}

double distribution(const PiecewiseFunction& f, double s, const GridOptions& grid) {
  double total = 0.0;
  for (const auto& piece : f.pieces()) total += above(make_level(piece, grid), s);
  return total;
}

struct RearrangedFunction::Impl {
  double b = 0.0;
  // exact single piece
  std::optional<Piece> single;
  // exact steps: descending values with cumulative starts
  std::vector<double> step_values;
  std::vector<double> step_cum;  // size n+1
  // inversion
  std::vector<Level> levels;
  double ess_inf = 0.0, ess_sup = 0.0;
  // numeric
  std::vector<double> values;
  std::vector<double> prefix;  // size n+1
  std::vector<double> suffix;  // suffix[k] = sum of weights k..n-1, size n+1

  double mu(double s) const {
    double t = 0.0;
    for (const auto& lv : levels) t += above(lv, s);
    return t;
  }
  double nu(double s) const {
    double t = 0.0;
    for (const auto& lv : levels) t += below(lv, s);
    return t;
  }
};

RearrangedFunction::RearrangedFunction(PiecewiseFunction source, RearrangeMode mode,
                                       std::shared_ptr<const Impl> impl)
    : source_(std::move(source)), mode_(mode), measure_(source_.domain().measure()), impl_(std::move(impl)) {}

double RearrangedFunction::operator()(double x) const {
  const Impl& m = *impl_;
  if (!(x >= 0.0 && x <= m.b)) throw DomainError("f* is defined on [0, " + std::to_string(m.b) + ")");
  if (x >= m.b) return at_end_offset(0.0);
  if (mode_ == RearrangeMode::exact && m.single) {
    const Piece& p = *m.single;
    switch (p.monotone) {
      case Monotonicity::increasing: {
        const double v = p.expr(p.span.hi - x);
        return std::isnan(v) ? one_sided_limit(p.expr, p.span, false) : v;
      }
      case Monotonicity::decreasing: {
        const double v = p.expr(p.span.lo + x);
        return std::isnan(v) ? one_sided_limit(p.expr, p.span, true) : v;
      }
      default:
        return p.expr(p.span.lo);
    }
  }
  if (mode_ == RearrangeMode::exact) {
    const auto it = std::upper_bound(m.step_cum.begin() + 1, m.step_cum.end(), x);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - (m.step_cum.begin() + 1)), m.step_values.size() - 1);
    return m.step_values[k];
  }
  if (mode_ == RearrangeMode::numeric) {
    const auto it = std::upper_bound(m.prefix.begin() + 1, m.prefix.end(), x);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - (m.prefix.begin() + 1)), m.values.size() - 1);
    return m.values[k];
  }
  if (x > 0.5 * m.b) return at_end_offset(m.b - x);
  if (x == 0.0) return m.ess_sup;
  return smallest_true([&](double s) { return m.mu(s) <= x; }, m.ess_inf, m.ess_sup);
}

double RearrangedFunction::at_end_offset(double d) const {
  const Impl& m = *impl_;
  if (!(d >= 0.0 && d <= m.b)) throw DomainError("end offset outside [0, measure]");
  if (mode_ == RearrangeMode::exact && m.single) {
    const Piece& p = *m.single;
    double v = 0.0;
    switch (p.monotone) {
      case Monotonicity::increasing:
        v = d == 0.0 ? std::nan("") : p.expr(p.span.lo + d);
        return std::isnan(v) ? one_sided_limit(p.expr, p.span, true) : v;
      case Monotonicity::decreasing:
        v = d == 0.0 ? std::nan("") : p.expr(p.span.hi - d);
        return std::isnan(v) ? one_sided_limit(p.expr, p.span, false) : v;
      default:
        return p.expr(p.span.lo);
    }
  }
  if (mode_ == RearrangeMode::exact) {
    const double x = std::max(0.0, m.b - d);
    const auto it = std::upper_bound(m.step_cum.begin() + 1, m.step_cum.end(), x);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - (m.step_cum.begin() + 1)), m.step_values.size() - 1);
    return m.step_values[k];
  }
  if (mode_ == RearrangeMode::numeric) {
    // Largest k with suffix[k] >= d.
    std::size_t lo = 0, hi = m.values.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (m.suffix[mid] >= d) lo = mid;
      else hi = mid - 1;
    }
    return m.values[lo];
  }
  if (d == 0.0) return m.ess_inf;
  return smallest_true([&](double s) { return m.nu(s) >= d; }, m.ess_inf, m.ess_sup);
}

double RearrangedFunction::integral_to(double x) const {
  const Impl& m = *impl_;
  x = std::clamp(x, 0.0, m.b);
  if (mode_ == RearrangeMode::exact && !m.single) {
    double s = 0.0;
    for (std::size_t k = 0; k < m.step_values.size(); ++k) {
      const double a = m.step_cum[k], b = std::min(m.step_cum[k + 1], x);
      if (b > a) s += m.step_values[k] * (b - a);
    }
    return s;
  }
  if (mode_ == RearrangeMode::numeric) {
    double s = 0.0;
    for (std::size_t k = 0; k < m.values.size(); ++k) {
      const double a = m.prefix[k], b = std::min(m.prefix[k + 1], x);
      if (b > a) s += m.values[k] * (b - a);
      if (m.prefix[k + 1] >= x) break;
    }
    return s;
  }
  if (mode_ == RearrangeMode::exact) {
    const Piece& p = *m.single;
    const Interval span = p.monotone == Monotonicity::increasing ? Interval{p.span.hi - x, p.span.hi}
                                                                 : Interval{p.span.lo, p.span.lo + x};
    return integrate([&](double t) { return p.expr(t); }, span).value;
  }
  return integrate([&](double y) { return (*this)(y); }, {0.0, x}).value;
}

double RearrangedFunction::end_resolution() const noexcept {
  if (mode_ != RearrangeMode::numeric) return 0.0;
  const Impl& m = *impl_;
  return m.suffix.size() >= 2 ? m.suffix[m.suffix.size() - 2] : 0.0;
}

std::optional<PiecewiseFunction> RearrangedFunction::closed_form() const {
  if (mode_ != RearrangeMode::exact) return std::nullopt;
  const Impl& m = *impl_;
  const IntervalDomain dom(0.0, m.b);
  const std::string name = source_.name() + "*";
  if (m.single) {
    const Piece& p = *m.single;
    const Expr t = Expr::variable();
    switch (p.monotone) {
      case Monotonicity::increasing:
        return PiecewiseFunction::single(dom, p.expr.compose(Expr::constant(p.span.hi) - t), Monotonicity::decreasing, name);
      case Monotonicity::decreasing:
        return PiecewiseFunction::single(dom, p.expr.compose(t + Expr::constant(p.span.lo)), Monotonicity::decreasing, name);
      default:
        return PiecewiseFunction::single(dom, p.expr, Monotonicity::constant, name);
    }
  }
  std::vector<Interval> spans;
  std::vector<double> values;
  for (std::size_t k = 0; k < m.step_values.size(); ++k) {
    if (!(m.step_cum[k + 1] > m.step_cum[k])) continue;
    spans.push_back({m.step_cum[k], m.step_cum[k + 1]});
    values.push_back(m.step_values[k]);
  }
  if (!spans.empty()) {
    spans.front().lo = 0.0;
    spans.back().hi = m.b;
  }
  return PiecewiseFunction::steps(dom, spans, values, name);
}

std::string RearrangedFunction::to_csv(std::size_t points) const {
  std::vector<double> xs;
  const double b = impl_->b;
  const std::size_t n = std::max<std::size_t>(points, 4);
  for (std::size_t i = 0; i < n / 2; ++i) xs.push_back(b * (static_cast<double>(i) + 0.5) / static_cast<double>(n / 2));
  for (std::size_t k = 1; k <= n / 4; ++k) {
    const double d = b * std::ldexp(1.0, -static_cast<int>(k));
    xs.push_back(d);
    xs.push_back(b - d);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::ostringstream os;
  os.precision(17);
  os << "x,f_star\n";
  for (double x : xs)
    if (x > 0.0 && x < b) os << x << ',' << (*this)(x) << '\n';
  return os.str();
}

RearrangedFunction rearrange(const PiecewiseFunction& f, const RearrangeOptions& options) {
  if (!f.domain().finite_measure())
    throw PreconditionError("rearrangement over an infinite-measure domain is not supported");
  check_nonnegative(f, options.grid);

  auto impl = std::make_shared<RearrangedFunction::Impl>();
  impl->b = f.domain().measure();

  RearrangeMode mode = RearrangeMode::numeric;
  if (f.pieces().size() == 1 && f.pieces()[0].monotone != Monotonicity::unknown) mode = RearrangeMode::exact;
  else if (f.is_step()) mode = RearrangeMode::exact;
  else if (f.all_monotone()) mode = RearrangeMode::monotone_inversion;
  if (options.force_mode) {
    if (*options.force_mode == RearrangeMode::exact && mode != RearrangeMode::exact)
      throw PreconditionError("exact rearrangement needs a single monotone piece or a step function");
    if (*options.force_mode == RearrangeMode::monotone_inversion && !f.all_monotone())
      throw PreconditionError("monotone inversion needs declared monotonicity on every piece");
    mode = *options.force_mode;
  }

  if (mode == RearrangeMode::exact) {
    if (f.pieces().size() == 1 && f.pieces()[0].monotone != Monotonicity::unknown && !f.is_step()) {
      impl->single = f.pieces()[0];
    } else {
      std::vector<std::pair<double, double>> steps;
      for (const auto& p : f.pieces()) steps.emplace_back(std::max(0.0, p.expr.constant_value()), p.span.length());
      std::stable_sort(steps.begin(), steps.end(), [](auto& a, auto& b) { return a.first > b.first; });
      impl->step_cum.push_back(0.0);
      for (auto& [v, len] : steps) {
        impl->step_values.push_back(v);
        impl->step_cum.push_back(impl->step_cum.back() + len);
      }
    }
  } else if (mode == RearrangeMode::monotone_inversion) {
    impl->ess_inf = kInf;
    impl->ess_sup = -kInf;
    for (const auto& p : f.pieces()) {
      impl->levels.push_back(make_level(p, options.grid));
      const Level& lv = impl->levels.back();
      const double a = p.monotone == Monotonicity::constant ? p.expr.constant_value() : lv.lim_lo;
      const double b = p.monotone == Monotonicity::constant ? p.expr.constant_value() : lv.lim_hi;
      impl->ess_inf = std::min({impl->ess_inf, a, b});
      impl->ess_sup = std::max({impl->ess_sup, a, b});
    }
    impl->ess_inf = std::max(0.0, impl->ess_inf);
  } else {
    std::vector<std::pair<double, double>> cells;
    for (const auto& p : f.pieces()) {
      const Grid g = make_grid(p.span, options.grid.points_per_piece);
      for (std::size_t i = 0; i < g.t.size(); ++i) {
        const double v = p.expr(g.t[i]);
        if (!std::isnan(v)) cells.emplace_back(std::max(0.0, v), g.weight[i]);
      }
    }
    std::sort(cells.begin(), cells.end(), [](auto& a, auto& b) { return a.first > b.first; });
    impl->prefix.push_back(0.0);
    for (auto& [v, w] : cells) {
      impl->values.push_back(v);
      impl->prefix.push_back(impl->prefix.back() + w);
    }
    impl->suffix.assign(cells.size() + 1, 0.0);
    for (std::size_t k = cells.size(); k-- > 0;) impl->suffix[k] = impl->suffix[k + 1] + cells[k].second;
  }
  return RearrangedFunction(f, mode, std::move(impl));
}

}  // namespace vlp
