#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "opaque/error.hpp"

namespace opaque {

// Absolute tolerance shared by every geometric predicate.
inline constexpr double kGeomTolerance = 1e-9;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
  friend auto operator<=>(const Point2& a, const Point2& b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 unit_direction(double alpha) { return {std::cos(alpha), std::sin(alpha)}; }
Point2 rotate(Point2 p, double angle);

// Canonical representatives: [0, 2pi) for sweep angles, [0, pi) for line directions.
double canonical_angle(double alpha);
double canonical_direction(double alpha);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval spanning(double a, double b) { return a <= b ? Interval{a, b} : Interval{b, a}; }
  double measure() const { return hi - lo; }
  bool contains(double v, double slack = 0.0) const { return v >= lo - slack && v <= hi + slack; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class Segment {
 public:
  // Throws kZeroLengthSegment when the endpoints are closer than the tolerance.
  Segment(Point2 a, Point2 b);

  Point2 a() const { return a_; }
  Point2 b() const { return b_; }
  Point2 vector() const { return b_ - a_; }
  double length() const { return distance(a_, b_); }
  // Direction modulo pi.
  double angle() const;
  Point2 at(double t) const { return a_ + t * (b_ - a_); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point2 a_;
  Point2 b_;
};

double total_length(std::span<const Segment> segments);

class ConvexPolygon {
 public:
  // Empty polygon; only useful as a placeholder (verifiers reject it).
  ConvexPolygon() = default;
  // Accepts either orientation, drops repeated and collinear vertices, and
  // throws kNonConvex / kDegenerateHull when the cleaned list is not a convex polygon.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  Point2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::vector<Segment> edges() const;

  double perimeter() const;
  double area() const;
  Point2 centroid() const;
  double diameter() const;
  // max vertex projection in direction alpha
  double support(double alpha) const;
  // signed distance to the boundary, positive inside
  double depth(Point2 p) const;
  bool contains(Point2 p, double slack = kGeomTolerance) const { return depth(p) >= -slack; }

  ConvexPolygon rotated(double angle) const;
  ConvexPolygon translated(Point2 offset) const;
  ConvexPolygon scaled(double factor, Point2 center) const;

 private:
  std::vector<Point2> vertices_;
};

// Andrew's monotone chain. Throws kDegenerateHull for fewer than three
// non-collinear points.
ConvexPolygon convex_hull(std::span<const Point2> points);

struct PolygonMetrics {
  double perimeter = 0.0;
  double area = 0.0;
  ConvexPolygon hull;
};
PolygonMetrics polygon_metrics(std::span<const Point2> points);

ConvexPolygon axis_rectangle(double x0, double y0, double x1, double y1);
// Centred, axis-aligned unit square.
ConvexPolygon unit_square();

// Keeps {p : dot(normal, p) >= offset}; nullopt when less than a polygon remains.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, Point2 normal, double offset);

// Parameter range [t0, t1] of the part of s inside poly shrunk by inset.
std::optional<std::pair<double, double>> clip_segment(const Segment& s, const ConvexPolygon& poly,
                                                      double inset = 0.0);
// Does s meet the interior of poly (deeper than the tolerance)?
bool meets_interior(const Segment& s, const ConvexPolygon& poly);
bool segments_intersect(const Segment& s, const Segment& t, double slack = kGeomTolerance);
double point_segment_distance(Point2 p, const Segment& s);

double project_point(Point2 p, double alpha);
Interval project_segment(const Segment& s, double alpha);
Interval project_polygon(const ConvexPolygon& poly, double alpha);

struct Scene {
  ConvexPolygon object;
  std::vector<Segment> barrier;

  double barrier_length() const { return total_length(barrier); }
};

}  // namespace opaque
