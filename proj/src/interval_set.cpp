#include "opaque/interval_set.hpp"

#include <algorithm>
#include <limits>

namespace opaque {

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) { canonicalize(); }

void IntervalSet::canonicalize() {
  for (auto& iv : parts_) {
    if (iv.lo > iv.hi) std::swap(iv.lo, iv.hi);
  }
  std::sort(parts_.begin(), parts_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Interval> merged;
  for (const auto& iv : parts_) {
    if (!merged.empty() && iv.lo - merged.back().hi < kGeomTolerance) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  parts_ = std::move(merged);
}

void IntervalSet::insert(Interval iv) {
  parts_.push_back(iv);
  canonicalize();
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi) ++i; else ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& a : parts_) {
    double cur = a.lo;
    while (j < other.parts_.size() && other.parts_[j].hi < cur) ++j;
    std::size_t k = j;
    while (k < other.parts_.size() && other.parts_[k].lo <= a.hi) {
      const Interval& b = other.parts_[k];
      if (b.lo > cur && b.lo - cur > kGeomTolerance) out.push_back({cur, b.lo});
      cur = std::max(cur, b.hi);
      if (b.hi > a.hi) break;
      ++k;
    }
    if (a.hi > cur && a.hi - cur > kGeomTolerance) out.push_back({cur, a.hi});
  }
  return IntervalSet(std::move(out));
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& iv : parts_) m += iv.measure();
  return m;
}

bool IntervalSet::contains(double v, double slack) const { return distance_to(v) <= slack; }

double IntervalSet::distance_to(double v) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : parts_) {
    if (iv.contains(v)) return 0.0;
    best = std::min(best, v < iv.lo ? iv.lo - v : v - iv.hi);
  }
  return best;
}

bool IntervalSet::includes(const IntervalSet& other, double slack) const {
  return other.subtract(*this).measure() <= slack;
}

}  // namespace opaque
