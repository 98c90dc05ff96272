#include "vlp/modular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "vlp/error.hpp"

namespace vlp {

namespace {

// Calls fn(span, a, b) for each cell of the common refinement of f and g.
void for_each_overlap(const PiecewiseFunction& f, const PiecewiseFunction& g,
                      const std::function<void(const Interval&, const Piece&, const Piece&)>& fn) {
  if (!(f.domain() == g.domain())) throw DomainError("functions live on different domains");
  const auto fp = f.pieces();
  const auto gp = g.pieces();
  std::size_t i = 0, j = 0;
  while (i < fp.size() && j < gp.size()) {
    const double lo = std::max(fp[i].span.lo, gp[j].span.lo);
    const double hi = std::min(fp[i].span.hi, gp[j].span.hi);
    if (lo < hi) fn({lo, hi}, fp[i], gp[j]);
    if (fp[i].span.hi < gp[j].span.hi) ++i;
    else if (gp[j].span.hi < fp[i].span.hi) ++j;
    else {
      ++i;
      ++j;
    }
  }
}

void accumulate(ModularValue& total, const IntegralResult& part) {
  if (part.outcome == IntegralOutcome::divergent) total.outcome = IntegralOutcome::divergent;
  else if (part.outcome == IntegralOutcome::indeterminate && total.outcome != IntegralOutcome::divergent)
    total.outcome = IntegralOutcome::indeterminate;
  total.value += part.value;
  total.error += part.error;
  if (!part.note.empty() && part.outcome != IntegralOutcome::finite) total.note = part.note;
}

constexpr double kScaleCap = 0x1p60;

// Sampled lower bound: some window of width w inside a piece where the
// integrand stays >= 2/w at 17 equispaced points, hence contributes > 1.
bool sampled_exceeds_one(const PiecewiseFunction& f, const ExponentFunction& p, double scale) {
  bool found = false;
  for_each_overlap(f, p.function(), [&](const Interval& span, const Piece& fp, const Piece& pp) {
    if (found || !std::isfinite(span.lo) || !std::isfinite(span.hi)) return;
    auto h = [&](double t) { return std::pow(std::abs(fp.expr(t)) / scale, pp.expr(t)); };
    const double len = span.length();
    for (int i = 1; i < 256 && !found; ++i) {
      // Samples crowd toward both ends, where overflow happens.
      const double u = static_cast<double>(i) / 256.0;
      for (double t : {span.lo + len * std::pow(u, 8.0), span.hi - len * std::pow(u, 8.0)}) {
        if (!(t > span.lo && t < span.hi) || !(h(t) >= 1e300)) continue;
        for (int j = 4; j < 1000 && !found; ++j) {
          const double w = std::ldexp(len, -j);
          for (double a : {t, t - w}) {
            if (a < span.lo || a + w > span.hi) continue;
            bool ok = true;
            for (int k = 0; k <= 16 && ok; ++k) ok = h(a + w * k / 16.0) >= 2.0 / w;
            if (ok) found = true;
          }
        }
        if (found) break;
      }
    }
  });
  return found;
}

}  // namespace

ModularValue modular(const PiecewiseFunction& f, const ExponentFunction& p, double scale,
                     const QuadratureOptions& options) {
  ModularValue out;
  out.exact = true;
  for_each_overlap(f, p.function(), [&](const Interval& span, const Piece& fp, const Piece& pp) {
    if (fp.expr.is_constant() && fp.expr.constant_value() == 0.0) return;
    if (fp.expr.is_constant() && pp.expr.is_constant()) {
      const double v = std::pow(std::abs(fp.expr.constant_value()) / scale, pp.expr.constant_value()) * span.length();
      if (std::isinf(v)) out.outcome = IntegralOutcome::divergent;
      out.value += v;
      return;
    }
    out.exact = false;
    auto integrand = [&](double t) { return std::pow(std::abs(fp.expr(t)) / scale, pp.expr(t)); };
    accumulate(out, integrate(integrand, span, options));
  });
  if (out.outcome == IntegralOutcome::divergent) out.value = kInf;
  if (out.outcome != IntegralOutcome::finite) out.exact = false;
  return out;
}

NormValue luxemburg_norm(const PiecewiseFunction& f, const ExponentFunction& p, const QuadratureOptions& options) {
  NormValue out;
  bool exact = true;
  // rho(f/r) > 1, with divergence counting as > 1.
  auto too_big = [&](double r) {
    const ModularValue m = modular(f, p, r, options);
    exact = exact && m.exact;
    if (m.outcome == IntegralOutcome::indeterminate && sampled_exceeds_one(f, p, r)) return true;
    if (m.outcome == IntegralOutcome::indeterminate)
      throw IndeterminateError("modular of '" + f.name() + "' at scale " + std::to_string(r) +
                               " is indeterminate: " + m.note);
    return m.outcome == IntegralOutcome::divergent || m.value > 1.0;
  };

  const bool zero = std::all_of(f.pieces().begin(), f.pieces().end(), [](const Piece& pc) {
    return pc.expr.is_constant() && pc.expr.constant_value() == 0.0;
  });
  if (zero) {
    out.exact = true;
    return out;
  }

  double lo = 0.0, hi = 0.0;
  if (too_big(1.0)) {
    lo = 1.0;
    hi = 2.0;
    while (too_big(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > kScaleCap)
        throw NotInSpaceError("'" + f.name() + "' has infinite modular at every scale up to 2^60");
    }
  } else {
    hi = 1.0;
    lo = 0.5;
    while (!too_big(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1.0 / kScaleCap) {
        out.r_hi = hi;
        out.value = hi;
        out.tolerance = hi;
        out.exact = exact;
        return out;
      }
    }
  }

  const double rel = exact ? 1e-13 : 1e-10;
  while (hi - lo >= rel * hi) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (!(mid > lo && mid < hi)) break;
    (too_big(mid) ? lo : hi) = mid;
  }
  out.r_lo = lo;
  out.r_hi = hi;
  out.value = hi;
  out.tolerance = hi - lo;
  out.exact = exact;
  return out;
}

NormValue char_norm(const IntervalSet& set, const ExponentFunction& p, const QuadratureOptions& options) {
  const IntervalSet inside = set.intersect(IntervalSet{p.domain().span()});
  if (inside.measure() <= 0.0 || std::abs(inside.measure() - set.measure()) > 1e-12 * std::max(1.0, set.measure()))
    throw DomainError("char_norm needs a set of positive measure inside the domain");
  return luxemburg_norm(indicator(p.domain(), inside), p, options);
}

HolderPairing holder_pairing(const PiecewiseFunction& f, const PiecewiseFunction& g, const ExponentFunction& p,
                             const QuadratureOptions& options) {
  HolderPairing out;
  ModularValue acc;
  for_each_overlap(f, g, [&](const Interval& span, const Piece& fp, const Piece& gp) {
    if ((fp.expr.is_constant() && fp.expr.constant_value() == 0.0) ||
        (gp.expr.is_constant() && gp.expr.constant_value() == 0.0))
      return;
    if (fp.expr.is_constant() && gp.expr.is_constant()) {
      acc.value += std::abs(fp.expr.constant_value() * gp.expr.constant_value()) * span.length();
      return;
    }
    accumulate(acc, integrate([&](double t) { return std::abs(fp.expr(t) * gp.expr(t)); }, span, options));
  });
  out.outcome = acc.outcome;
  out.value = acc.outcome == IntegralOutcome::divergent ? kInf : acc.value;

  const ExponentFunction conj(combine(p.function(), nullptr, DerivedKind::conjugate).renamed(p.name() + "'"));
  out.norm_f = luxemburg_norm(f, p, options).value;
  out.norm_g_conjugate = luxemburg_norm(g, conj, options).value;
  out.bound = 4.0 * out.norm_f * out.norm_g_conjugate;
  return out;
}

}  // namespace vlp
