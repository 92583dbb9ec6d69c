#pragma once

#include <span>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

// Sorted, exact-duplicate-free copy.
std::vector<Point2> unique_points(std::span<const Point2> points);

// Angles alpha in [0, pi) at which two distinct points have equal projection.
// Between consecutive angles the order of all projections is fixed.
std::vector<double> coincidence_angles(std::span<const Point2> points);

// Directions theta in [0, 2pi) parallel to p - q for distinct points p, q.
std::vector<double> pair_directions(std::span<const Point2> points);

struct Arc {
  double lo = 0.0;
  double hi = 0.0;
  double at(double fraction) const { return lo + fraction * (hi - lo); }
  double mid() const { return at(0.5); }
};

// Consecutive open arcs of [0, period) cut at the given angles (and at 0).
std::vector<Arc> arcs_between(std::vector<double> cuts, double period);

// An interval whose endpoints carry the identity of the point they came from
// (-1 when there is none). Comparisons between the same point are exact ties.
struct TaggedInterval {
  double lo = 0.0;
  double hi = 0.0;
  int lo_id = -1;
  int hi_id = -1;
};

// Widest-chain slack: the largest s such that some chain of parts reaches
// from target.lo to target.hi with every overlap (and the two end overhangs)
// at least s. Exact ties count as +inf. Negative means target is not covered.
double chain_slack(const TaggedInterval& target, std::span<const TaggedInterval> parts);

}  // namespace opaque
