#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

enum class SquareBarrier { kThreeSides, kDiagonals, kTwoSidesHalfDiagonal, kHalfDiagonalSteiner };

std::string_view to_string(SquareBarrier variant);
std::optional<SquareBarrier> parse_square_barrier(std::string_view name);

// Barrier of the centred unit square:
//   three sides: left, bottom, right
//   diagonals: both diagonals
//   two sides + half diagonal: left, bottom, centre to (1/2, 1/2)
//   Steiner: centre to (1/2, 1/2) plus the Steiner tree of the lower-left half
Scene make_square_barrier(SquareBarrier variant);
// 3, 2 sqrt 2, 2 + 1/sqrt 2, sqrt 2 + sqrt 6 / 2.
double square_barrier_length(SquareBarrier variant);

// Point minimising the total distance to a, b, c. Throws kDegenerateHull for collinear input.
Point2 fermat_point(Point2 a, Point2 b, Point2 c);

class Polyline {
 public:
  // At least two vertices, consecutive ones distinct.
  explicit Polyline(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::vector<Segment> segments() const;
  double length() const;
  // point at arc length s from the start (clamped)
  Point2 at_length(double s) const;

 private:
  std::vector<Point2> vertices_;
};

// Replaces a curve by a polyline barrier of length at most (1 + epsilon) times
// the curve length whose convex hull strictly contains the curve's hull: the
// curve is magnified about its hull centroid and resampled by arc length.
// A two-vertex curve is returned as is; a collinear curve becomes its span.
std::vector<Segment> straighten(const Polyline& curve, double epsilon);

}  // namespace opaque
