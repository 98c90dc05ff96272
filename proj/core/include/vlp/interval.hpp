#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "vlp/error.hpp"

namespace vlp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  bool finite() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double t) const noexcept { return t >= lo && t <= hi; }
  bool operator==(const Interval&) const = default;
};

/// Lebesgue measure space on an interval (lo, hi); hi may be +infinity.
class IntervalDomain {
 public:
  IntervalDomain(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo < hi) || !std::isfinite(lo) || lo < 0.0)
      throw DomainError("domain requires 0 <= lo < hi, got [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool finite_measure() const noexcept { return std::isfinite(hi_); }
  double measure() const noexcept { return hi_ - lo_; }
  Interval span() const noexcept { return {lo_, hi_}; }
  bool operator==(const IntervalDomain&) const = default;

 private:
  double lo_;
  double hi_;
};

/// Finite union of disjoint open intervals, kept sorted and merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  IntervalSet(std::initializer_list<Interval> parts)
      : IntervalSet(std::vector<Interval>(parts)) {}

  std::span<const Interval> parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  double measure() const noexcept;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;

  /// Exact test: no pair of parts overlaps in more than an endpoint.
  bool disjoint_from(const IntervalSet& other) const noexcept;
  bool contains(double t) const noexcept;

  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace vlp
