#include "vlp/nakano.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "vlp/error.hpp"
#include "vlp/interval.hpp"

namespace vlp {

namespace {

struct Window {
  double slope = 0.0;
  double max = 0.0;
  double min = kInf;
  double min_ratio = kInf;  // min of e_n / ln(n + 1)
  std::size_t equal = 0;
  std::size_t unequal = 0;
};

Window scan(const ExponentSequence& p, const ExponentSequence& q, double from, double to) {
  constexpr int kPoints = 200;
  std::vector<double> xs, ys;
  Window w;
  std::size_t last = 0;
  for (int i = 0; i <= kPoints; ++i) {
    const auto n = static_cast<std::size_t>(std::llround(from * std::pow(to / from, static_cast<double>(i) / kPoints)));
    if (n == last || n == 0) continue;
    last = n;
    const double pn = p(n), qn = q(n);
    if (!(pn >= 1.0) || !(qn >= 1.0) || !std::isfinite(pn) || !std::isfinite(qn))
      throw RangeError("exponent sequences need finite terms >= 1 (n = " + std::to_string(n) + ")");
    if (pn == qn) {
      ++w.equal;
      continue;
    }
    ++w.unequal;
    const double e = pn * qn / std::abs(pn - qn);
    xs.push_back(std::log(static_cast<double>(n) + 1.0));
    ys.push_back(e);
    w.max = std::max(w.max, e);
    w.min = std::min(w.min, e);
    w.min_ratio = std::min(w.min_ratio, e / xs.back());
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    w.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  }
  return w;
}

}  // namespace

NakanoVerdict nakano_equivalent(const ExponentSequence& p, const ExponentSequence& q, std::size_t horizon) {
  if (horizon < 256) throw PreconditionError("nakano_equivalent needs a horizon of at least 256");
  const double h = static_cast<double>(horizon);
  const Window early = scan(p, q, std::pow(h, 0.25), std::sqrt(h));
  const Window late = scan(p, q, std::sqrt(h), h);

  NakanoVerdict out;
  out.slope_early = early.slope;
  out.slope_late = late.slope;
  out.max_early = early.max;
  out.max_late = late.max;

  out.min_early = early.min;
  out.min_late = late.min;

  if (late.unequal == 0) {
    out.equivalent = Tri::yes;
    out.alpha = 0.5;
    out.criterion = "p_n = q_n on the tail";
    return out;
  }
  // Equal terms contribute 0 and are ignored; the envelopes need enough of
  // the others.
  constexpr std::size_t kMinTerms = 10;
  if (early.unequal < kMinTerms || late.unequal < kMinTerms) {
    out.criterion = "too few terms with p_n != q_n to judge";
    return out;
  }
  if (late.min <= 1.05 * early.min) {
    // Infinitely many terms alpha^{e_n} >= alpha^M.
    out.equivalent = Tri::no;
    out.criterion = "p_n q_n/|p_n - q_n| stays bounded along a subsequence";
    return out;
  }
  if (late.min_ratio > 0.0 && late.min_ratio >= 0.8 * early.min_ratio) {
    // e_n >= K ln(n + 1) on the tail: sum (n+1)^{-K ln(1/alpha)} converges
    // once K ln(1/alpha) > 1; ask for 2.
    for (int k = 1; k <= 40; ++k) {
      const double alpha = std::ldexp(1.0, -k);
      if (late.min_ratio * std::log(1.0 / alpha) >= 2.0) {
        out.equivalent = Tri::yes;
        out.alpha = alpha;
        out.criterion = "p_n q_n/|p_n - q_n| stays above a multiple of ln n";
        return out;
      }
    }
    out.criterion = "growth of p_n q_n/|p_n - q_n| too slow for alpha >= 2^-40";
    return out;
  }
  out.criterion = "no detectable trend of p_n q_n/|p_n - q_n| within the horizon";
  return out;
}

}  // namespace vlp
