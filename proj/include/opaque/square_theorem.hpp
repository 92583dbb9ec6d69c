#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "opaque/certificates.hpp"
#include "opaque/geometry.hpp"

namespace opaque {

// Height of the triangles glued onto the sides of the unit square.
inline constexpr double kOctagonHeight = 29.0 / 590.0;
inline constexpr double kKappa = 0.1813;
inline constexpr double kLambda = kPi / 8.0;
inline constexpr double kEta = 0.03586;

struct OctagonScene {
  ConvexPolygon square;
  ConvexPolygon octagon;
  // corner pieces, counter-clockwise from the upper right one
  std::array<ConvexPolygon, 4> regions;
};

OctagonScene build_octagon();
// R_0 = {7/8 <= x + y <= 1} intersected with the octagon, and its quarter turns.
std::array<ConvexPolygon, 4> corner_regions(const OctagonScene& scene);

// Signed distance between the projections R_i(alpha) and R_j(alpha); negative when they overlap.
double projection_gap(const OctagonScene& scene, int i, int j, double alpha);

struct AnglePartition {
  int region = 0;
  // targets[k] = (region + k + 1) mod 4
  std::array<int, 3> targets{};
  std::array<std::vector<Segment>, 3> classes;
};

// Splits segments by direction into the arcs [pi/2 i - pi/4, pi/2 i + pi/8),
// [pi/2 i + pi/8, pi/2 i + 3pi/8) and [pi/2 i + 3pi/8, pi/2 i + 3pi/4).
AnglePartition angle_partition(std::span<const Segment> segments, int region);

struct ChainRow {
  std::string name;
  double value = 0.0;
  std::string inequality;
  bool holds = false;
  // distance from the threshold in the direction of the inequality
  double slack = 0.0;
};

struct ConstantChainReport {
  std::vector<ChainRow> rows;
  double lower_bound = 0.0;

  bool reproduced() const;
};

ConstantChainReport reproduce_theorem_constants();

// One vertical segment of length eta on each side of the origin, with the
// theorem's kappa, lambda and D: a valid instance of the segment-group hypotheses.
SegmentGroupConfig theorem_group_config();

// Angular measure of line directions through x that meet the object (pi inside it).
double visual_angle(Point2 x, const ConvexPolygon& object);
// A line through x with uniform direction misses the object with probability < delta.
bool s_delta_contains(Point2 x, const ConvexPolygon& object, double delta);

// Length of the barrier inside the slab lo <= dot(normal, p) <= hi.
double barrier_length_in_slab(std::span<const Segment> barrier, Point2 normal, double lo, double hi);

}  // namespace opaque
