#include "vlp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace vlp {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double s = f(c - dx) + f(c + dx);
    kron += kWgk[i] * s;
    if (i % 2 == 1) gauss += kWg[i / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

std::string to_string(IntegralOutcome o) {
  switch (o) {
    case IntegralOutcome::finite: return "FINITE";
    case IntegralOutcome::divergent: return "DIVERGENT";
    case IntegralOutcome::indeterminate: return "INDETERMINATE";
  }
  return "?";
}

double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double* error, int max_intervals) {
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double total = first.value, err = first.error;
  heap.push(first);
  int count = 1;
  while (std::isfinite(total) && err > rel_tol * std::abs(total) && err > 1e-300 && count < max_intervals) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    const Segment l = gk15(f, worst.a, mid);
    const Segment r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // Recompute from the pieces to shed accumulated rounding.
  if (std::isfinite(total)) {
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
      total += heap.top().value;
      err += heap.top().error;
      heap.pop();
    }
  }
  if (error) *error = err;
  return total;
}

namespace {

struct EndResult {
  IntegralOutcome outcome = IntegralOutcome::indeterminate;
  double value = 0.0;
  double error = 0.0;
  std::vector<TailPanel> trace;
  std::string note;
};

// Geometric panels towards one end. `next_panel(j)` returns the panel
// [a, b] and its offset from the end, or false once the floor is reached.
template <class PanelFn>
EndResult march(const std::function<double(double)>& f, PanelFn next_panel, const QuadratureOptions& opt) {
  EndResult out;
  std::vector<double> values;
  std::vector<double> log_ratios;  // ln(c_j / c_{j-1}); NaN when undefined
  std::vector<bool> resolved;
  double sum = 0.0, err = 0.0;
  int zeros = 0;

  auto recent_resolved = [&](std::size_t count) {
    if (resolved.size() < count) return false;
    return std::all_of(resolved.end() - static_cast<std::ptrdiff_t>(count), resolved.end(), [](bool r) { return r; });
  };
  auto finite = [&](double value, double error, std::string note) {
    if (err > opt.panel_tol * std::abs(sum) && err > 1e-300) {
      out.outcome = IntegralOutcome::indeterminate;
      out.note = "panel quadrature unresolved (oscillating integrand?)";
    } else {
      out.outcome = IntegralOutcome::finite;
      out.note = std::move(note);
    }
    out.value = value;
    out.error = error;
    return out;
  };

  auto recent_growth = [&](std::size_t count) {
    if (log_ratios.size() < count) return false;
    for (std::size_t i = log_ratios.size() - count; i < log_ratios.size(); ++i)
      if (!(log_ratios[i] >= std::log(opt.growth_factor))) return false;
    return true;
  };

  // Mean log growth over the latest window against the window ending at
  // half the panel count. Decelerating growth does not count.
  auto sustained = [&] {
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(opt.growth_panels),
                                                std::max<std::size_t>(log_ratios.size() / 2, 1));
    if (log_ratios.size() < 2 * n) return false;
    auto mean = [&](std::size_t end) {
      double s = 0.0;
      for (std::size_t i = end - n; i < end; ++i) s += std::isfinite(log_ratios[i]) ? log_ratios[i] : 0.0;
      return s / static_cast<double>(n);
    };
    const double recent = mean(log_ratios.size());
    const double earlier = mean(std::max(n, log_ratios.size() / 2));
    return recent > 0.0 && recent >= opt.sustained_growth * earlier;
  };

  for (int j = 0;; ++j) {
    double a = 0, b = 0, offset = 0;
    if (!next_panel(j, a, b, offset)) break;
    double e = 0.0;
    const double c = gauss_kronrod(f, a, b, opt.rel_tol, &e);

    if (!std::isfinite(c)) {
      // Fast growth can overflow before growth_panels panels exist; accept
      // a shorter run if every panel so far was resolved.
      const std::size_t have = std::min<std::size_t>(resolved.size(), static_cast<std::size_t>(opt.growth_panels));
      const bool reliable = have >= 3 && recent_resolved(have);
      const bool growing = (sum > opt.divergence_threshold || recent_growth(2)) && sustained() && reliable;
      out.outcome = growing ? IntegralOutcome::divergent : IntegralOutcome::indeterminate;
      out.note = growing     ? "integrand overflowed after sustained growth"
                 : reliable ? "non-finite integrand value"
                            : "integrand overflowed; preceding panels unresolved";
      out.trace.push_back({offset, c, sum});
      return out;
    }
    sum += c;
    err += e;
    resolved.push_back(e <= opt.panel_tol * std::abs(c) || e <= 1e-300);
    out.trace.push_back({offset, c, sum});
    if (!values.empty()) {
      const double prev = values.back();
      log_ratios.push_back(prev > 0 && c > 0 ? std::log(c / prev) : (c == 0 ? -kInf : kInf));
    }
    values.push_back(c);

    zeros = c == 0.0 ? zeros + 1 : 0;
    if (zeros >= 3 && j >= 3) return finite(sum, err, "");

    if (values.size() >= 4) {
      double r = 0.0;
      bool shrinking = true;
      for (std::size_t i = log_ratios.size() - 3; i < log_ratios.size(); ++i) {
        shrinking = shrinking && log_ratios[i] < 0.0;
        r = std::max(r, std::exp(log_ratios[i]));
      }
      if (shrinking) {
        const double tail = c * r / (1.0 - r);
        if (tail <= opt.rel_tol * sum || sum == 0.0) return finite(sum + tail, err + tail, "");
      }
    }

    if (sum > opt.divergence_threshold && recent_growth(static_cast<std::size_t>(opt.growth_panels)) &&
        sustained() && recent_resolved(static_cast<std::size_t>(opt.growth_panels))) {
      out.outcome = IntegralOutcome::divergent;
      out.note = "tail panels grow geometrically";
      return out;
    }
  }

  // Floor reached. Accept a steadily shrinking tail by extrapolation.
  if (log_ratios.size() >= 5) {
    double r = 0.0;
    bool steady = true;
    for (std::size_t i = log_ratios.size() - 5; i < log_ratios.size(); ++i) {
      steady = steady && log_ratios[i] < std::log(0.99);
      r = std::max(r, std::exp(log_ratios[i]));
    }
    if (steady) {
      const double tail = values.back() * r / (1.0 - r);
      return finite(sum + tail, err + tail, "tail extrapolated at the resolution floor");
    }
  }
  out.outcome = IntegralOutcome::indeterminate;
  out.value = sum;
  out.error = err;
  out.note = "neither convergence nor sustained growth before the resolution floor";
  return out;
}

double end_floor(double e) {
  if (e == 0.0) return 1e-300;
  const double ulp = std::nextafter(std::abs(e), kInf) - std::abs(e);
  return std::max(1e-300, 4.0 * ulp);
}

EndResult march_finite(const std::function<double(double)>& f, double end, double width, bool at_lo,
                       const QuadratureOptions& opt) {
  const double floor = end_floor(end);
  auto panel = [&](int j, double& a, double& b, double& offset) {
    const double outer = std::ldexp(width, -j);
    const double inner = std::ldexp(width, -j - 1);
    if (inner < floor) return false;
    offset = inner;
    if (at_lo) {
      a = end + inner;
      b = end + outer;
    } else {
      a = end - outer;
      b = end - inner;
    }
    return a < b;
  };
  return march(f, panel, opt);
}

EndResult march_infinite(const std::function<double(double)>& f, double start, const QuadratureOptions& opt) {
  auto panel = [&](int j, double& a, double& b, double& offset) {
    a = start + (std::ldexp(1.0, j) - 1.0);
    b = start + (std::ldexp(1.0, j + 1) - 1.0);
    offset = a;
    return b < 1e300;
  };
  return march(f, panel, opt);
}

void merge(IntegralResult& total, const EndResult& part) {
  if (part.outcome == IntegralOutcome::divergent) total.outcome = IntegralOutcome::divergent;
  else if (part.outcome == IntegralOutcome::indeterminate && total.outcome != IntegralOutcome::divergent)
    total.outcome = IntegralOutcome::indeterminate;
  total.value += part.value;
  total.error += part.error;
  if (!part.note.empty()) total.note += (total.note.empty() ? "" : "; ") + part.note;
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, const Interval& span,
                         const QuadratureOptions& options) {
  IntegralResult out;
  out.outcome = IntegralOutcome::finite;
  if (!(span.lo < span.hi)) return out;

  const double fin_hi = std::isfinite(span.hi) ? span.hi : span.lo + 1.0;
  const double mid = span.lo + 0.5 * (fin_hi - span.lo);
  const EndResult left = march_finite(f, span.lo, mid - span.lo, true, options);
  const EndResult right = march_finite(f, fin_hi, fin_hi - mid, false, options);
  merge(out, left);
  merge(out, right);
  out.lo_trace = left.trace;
  out.hi_trace = right.trace;
  if (!std::isfinite(span.hi)) {
    const EndResult tail = march_infinite(f, fin_hi, options);
    merge(out, tail);
    out.hi_trace = tail.trace;
  }
  if (out.outcome != IntegralOutcome::finite) out.value = out.outcome == IntegralOutcome::divergent ? kInf : out.value;
  return out;
}

}  // namespace vlp
