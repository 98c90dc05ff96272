#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

// Hand-rolled fixture generators. Every sample carries its inline spec and
// an independent closed form of the same function for the oracles.
namespace gen {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
std::string num(double v);

enum class Shape { increasing, decreasing, decreasing_log, step, tent, oscillating };

struct Sample {
  Shape shape;
  std::string spec;
  std::string expr;  // single-piece expression, empty for step and tent
  std::function<double(double)> f;
  double b = 1.0;  // domain (0, b)
  std::vector<double> breaks;
  // step pieces: value i on (cuts[i], cuts[i+1])
  std::vector<double> cuts;
  std::vector<double> values;
  // oscillating: c + a sin(w t)^2
  double c = 0.0, a = 0.0, w = 0.0;

  bool single_monotone() const {
    return shape == Shape::increasing || shape == Shape::decreasing || shape == Shape::decreasing_log;
  }
};

/// Function >= floor on (0, b), b drawn from [0.5, 3] unless given.
/// `index` cycles the shapes; `bounded` skips the unbounded logarithmic one.
Sample function(Rng& rng, std::size_t index, double floor = 0.0, bool bounded = false, double b = 0.0);

/// Exponent >= floor (default 1), bounded unless `bounded` is false.
inline Sample exponent(Rng& rng, std::size_t index, double floor = 1.0, bool bounded = true, double b = 0.0) {
  return function(rng, index, floor, bounded, b);
}

/// Exact |{t : f(t) > s}| from the closed form.
double level_measure(const Sample& s, double level);

/// Decreasing rearrangement from the closed form: sorted step values, the
/// reflection of increasing shapes, or level-measure inversion otherwise.
double rearranged(const Sample& s, double x);

/// Discontinuities of the rearrangement (cumulative step lengths).
std::vector<double> rearranged_breaks(const Sample& s);

}  // namespace gen
