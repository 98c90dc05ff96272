#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Reference computations that share no code with the library.
namespace oracle {

/// Tanh-sinh quadrature of f over (a, b) split at `breaks`; tolerates
/// integrable endpoint singularities of each cell.
double integrate(const std::function<double(double)>& f, double a, double b, const std::vector<double>& breaks = {});

/// |{t in (a, b) : f(t) > s}| for f monotone on (a, b), by bisection on f.
double monotone_level_measure(const std::function<double(double)>& f, double a, double b, double s);

/// |{t in (0, len) : sin(w t)^2 > u}| in closed form.
double sin2_level_measure(double w, double len, double u);

/// sup over pairs on a dense uniform grid plus geometric near-diagonal
/// offsets of |f(x) - f(y)| ln(e + 1/|x - y|).
double log_holder_brute(const std::function<double(double)>& f, double a, double b, std::size_t n = 2000);

/// Whether sum_n alpha^{e_n}, e_n = p_n q_n / |p_n - q_n| (0 when equal),
/// converges for some alpha on a 40-point grid, judged by the partial sums
/// to `horizon`: the increment over (H/2, H] must be below 0.9 of the
/// increment over (H/4, H/2], or both must vanish.
bool nakano_brute(const std::function<double(double)>& p, const std::function<double(double)>& q,
                  std::size_t horizon = 1000000);

}  // namespace oracle
