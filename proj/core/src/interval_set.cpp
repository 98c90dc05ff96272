#include <algorithm>
#include <sstream>

#include "vlp/interval.hpp"

namespace vlp {

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return !(i.hi > i.lo); });
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi)
      parts_.back().hi = std::max(parts_.back().hi, p.hi);
    else
      parts_.push_back(p);
  }
}

double IntervalSet::measure() const noexcept {
  double m = 0.0;
  for (const auto& p : parts_) m += p.length();
  return m;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all(parts_.begin(), parts_.end());
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const double lo = std::max(parts_[i].lo, other.parts_[j].lo);
    const double hi = std::min(parts_[i].hi, other.parts_[j].hi);
    if (hi > lo) out.push_back({lo, hi});
    if (parts_[i].hi < other.parts_[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const auto& p : parts_) {
    double cursor = p.lo;
    for (const auto& q : other.parts_) {
      if (q.hi <= cursor) continue;
      if (q.lo >= p.hi) break;
      if (q.lo > cursor) out.push_back({cursor, q.lo});
      cursor = std::max(cursor, q.hi);
      if (cursor >= p.hi) break;
    }
    if (cursor < p.hi) out.push_back({cursor, p.hi});
  }
  return IntervalSet(std::move(out));
}

bool IntervalSet::disjoint_from(const IntervalSet& other) const noexcept {
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    if (std::min(parts_[i].hi, other.parts_[j].hi) > std::max(parts_[i].lo, other.parts_[j].lo))
      return false;
    if (parts_[i].hi < other.parts_[j].hi)
      ++i;
    else
      ++j;
  }
  return true;
}

bool IntervalSet::contains(double t) const noexcept {
  return std::any_of(parts_.begin(), parts_.end(),
                     [t](const Interval& p) { return t > p.lo && t < p.hi; });
}

std::string IntervalSet::to_string() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << " U ";
    os << "(" << parts_[k].lo << ", " << parts_[k].hi << ")";
  }
  if (parts_.empty()) os << "{}";
  return os.str();
}

}  // namespace vlp
