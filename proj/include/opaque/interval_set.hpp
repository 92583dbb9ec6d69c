#pragma once

#include <initializer_list>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

// Sorted union of closed intervals. Members closer than kGeomTolerance are
// merged, so the representation depends only on the covered set.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  IntervalSet(std::initializer_list<Interval> parts) : IntervalSet(std::vector<Interval>(parts)) {}

  void insert(Interval iv);

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  // Closure of the set difference; slivers thinner than the tolerance are dropped.
  IntervalSet subtract(const IntervalSet& other) const;

  double measure() const;
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Interval>& parts() const { return parts_; }
  bool contains(double v, double slack = 0.0) const;
  // Distance from v to the set (0 inside, +inf for the empty set).
  double distance_to(double v) const;
  bool includes(const IntervalSet& other, double slack = kGeomTolerance) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  void canonicalize();
  std::vector<Interval> parts_;
};

}  // namespace opaque
