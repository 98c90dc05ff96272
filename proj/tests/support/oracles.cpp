#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {

constexpr double kSkip = -1.0;

double tanh_sinh(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  constexpr double kPiHalf = std::numbers::pi / 2;
  // Node at parameter u: distance from the nearer endpoint is (b - a) / (e^{2v} + 1).
  auto term = [&](double u) {
    const double v = kPiHalf * std::sinh(u);
    const double gap = (b - a) / (std::exp(2.0 * std::abs(v)) + 1.0);
    const double ch = std::cosh(v);
    const double w = half * kPiHalf * std::cosh(u) / (ch * ch);
    double s = 0.0;
    for (double x : {a + gap, b - gap}) {
      if (!(x > a && x < b)) continue;
      const double y = f(x);
      if (std::isinf(y)) return y;  // overflowed integrand: the integral is infinite in double range
      if (!std::isnan(y)) s += w * y;
    }
    return u == 0.0 ? 0.5 * s : s;
  };
  double h = 0.5, prev = 0.0, sum = 0.0;
  for (double u = 0.0; u <= 6.5; u += h) sum += term(u);
  prev = sum * h;
  for (int level = 0; level < 12; ++level) {
    h *= 0.5;
    for (double u = h; u <= 6.5; u += 2 * h) sum += term(u);
    const double est = sum * h;
    if (std::abs(est - prev) <= 1e-15 * std::abs(est) && level > 2) return est;
    prev = est;
  }
  return prev;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, const std::vector<double>& breaks) {
  std::vector<double> cuts{a, b};
  for (double c : breaks)
    if (c > a && c < b) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) s += tanh_sinh(f, cuts[i], cuts[i + 1]);
  return s;
}

double monotone_level_measure(const std::function<double(double)>& f, double a, double b, double s) {
  const double fa = f(a + (b - a) * 1e-15), fb = f(b - (b - a) * 1e-15);
  const bool inc = fb >= fa;
  if (inc ? fa > s : fb > s) return b - a;
  if (inc ? fb <= s : fa <= s) return 0.0;
  double lo = a, hi = b;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (lo + hi);
    if (!(m > lo && m < hi)) break;
    ((f(m) > s) == inc ? hi : lo) = m;
  }
  return inc ? b - hi : lo - a;
}

double sin2_level_measure(double w, double len, double u) {
  if (u < 0.0) return len;
  if (u >= 1.0) return 0.0;
  const double th = std::asin(std::sqrt(u));
  const double pi = std::numbers::pi;
  const double y = w * len;
  const double periods = std::floor(y / pi);
  const double rest = y - periods * pi;
  const double partial = std::clamp(rest - th, 0.0, pi - 2 * th);
  return (periods * (pi - 2 * th) + partial) / w;
}

double log_holder_brute(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  std::vector<double> x(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = a + (b - a) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    v[i] = f(x[i]);
  }
  double c = 0.0;
  auto weight = [](double d) { return std::log(std::numbers::e + 1.0 / d); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c = std::max(c, std::abs(v[i] - v[j]) * weight(x[j] - x[i]));
  for (std::size_t i = 0; i < n; i += 7)
    for (int k = 12; k < 50; ++k) {
      const double d = std::ldexp(b - a, -k);
      if (x[i] + d < b) c = std::max(c, std::abs(f(x[i] + d) - v[i]) * weight(d));
    }
  return c;
}

bool nakano_brute(const std::function<double(double)>& p, const std::function<double(double)>& q,
                  std::size_t horizon) {
  const std::size_t h = horizon, lo = h / 4;
  std::vector<double> e;
  e.reserve(h - lo);
  for (std::size_t n = lo + 1; n <= h; ++n) {
    const double pn = p(static_cast<double>(n)), qn = q(static_cast<double>(n));
    e.push_back(pn == qn ? kSkip : pn * qn / std::abs(pn - qn));
  }
  const std::size_t mid = h / 2 - lo;
  for (int j = 40; j >= 1; --j) {
    const double la = -0.5 * j * std::numbers::ln2;  // alpha = 2^{-j/2}
    double first = 0.0, second = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == kSkip) continue;
      (i < mid ? first : second) += std::exp(la * e[i]);
    }
    if ((first == 0.0 && second == 0.0) || second < 0.9 * first) return true;
  }
  return false;
}

}  // namespace oracle
