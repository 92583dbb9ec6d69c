#pragma once

#include <array>
#include <span>
#include <vector>

#include "opaque/coverage.hpp"
#include "opaque/geometry.hpp"

namespace opaque {

struct MultiScene {
  std::vector<ConvexPolygon> objects;
  std::vector<Segment> barrier;

  double barrier_length() const { return total_length(barrier); }
};

// Does the ray origin + t * dir(direction), t >= 0, pass within slack of a segment?
bool ray_blocked(std::span<const Segment> barrier, Point2 origin, double direction, double slack = kGeomTolerance);
// Origin in some object, ray misses the barrier by more than the tolerance.
bool ray_witness_is_valid(const MultiScene& scene, const RayWitness& ray);

// Decides whether every half-line starting in an object meets the barrier.
// A ray from an interior point contains the ray from the point where it leaves
// the object, so it suffices that, for every direction, each edge the direction
// leaves through is covered by the preimages {lambda : e(lambda) + t dir in b, t >= 0}.
// Directions are cut wherever two scene points (vertices, barrier endpoints,
// barrier/edge crossings) line up, which fixes the combinatorics in between.
Verdict verify_ray_barrier(const MultiScene& scene, double tol = kDefaultTolerance);

// The full perimeter: no half-line barrier of a convex object is shorter.
double halfline_jones_bound(const ConvexPolygon& object);

struct Figure9 {
  // separate boundaries, hull of everything, the cheaper mixed barrier
  std::array<MultiScene, 3> scenes;
  // lengths at the given thickness
  std::array<double, 3> lengths{};
  // limits as the thickness goes to 0: 64, 32 + 2 sqrt 260, 62 + 4/sqrt 5
  std::array<double, 3> ideal_lengths{};
};

// Two thin rectangles with vertices (+-1, 8 +- t) and (+-15, +-t).
// Throws kInvalidArgument unless 0 < t <= 0.01.
Figure9 figure9_scene(double thickness);

}  // namespace opaque
