#include "opaque/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace opaque {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kNonConvex: return "non-convex";
    case ErrorCode::kZeroLengthSegment: return "zero-length-segment";
    case ErrorCode::kDegenerateHull: return "degenerate-hull";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double canonical_angle(double alpha) {
  double r = std::fmod(alpha, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double canonical_direction(double alpha) {
  double r = std::fmod(alpha, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

Segment::Segment(Point2 a, Point2 b) : a_(a), b_(b) {
  if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(b.x) || !std::isfinite(b.y))
    throw Error(ErrorCode::kInvalidArgument, "segment endpoint is not finite");
  if (distance(a, b) <= kGeomTolerance)
    throw Error(ErrorCode::kZeroLengthSegment, "segment has zero length");
}

double Segment::angle() const {
  const Point2 d = vector();
  return canonical_direction(std::atan2(d.y, d.x));
}

double total_length(std::span<const Segment> segments) {
  double sum = 0.0;
  for (const auto& s : segments) sum += s.length();
  return sum;
}

namespace {

double signed_area(const std::vector<Point2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

void drop_repeats(std::vector<Point2>& v) {
  std::vector<Point2> out;
  for (const auto& p : v) {
    if (out.empty() || distance(out.back(), p) > kGeomTolerance) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= kGeomTolerance) out.pop_back();
  v = std::move(out);
}

// Removes vertices lying on the segment between their neighbours.
void drop_collinear(std::vector<Point2>& v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const Point2 prev = v[(i + v.size() - 1) % v.size()];
      const Point2 cur = v[i];
      const Point2 next = v[(i + 1) % v.size()];
      const Point2 d = next - prev;
      const double len = norm(d);
      if (len <= kGeomTolerance) continue;
      const double off = std::abs(cross(d, cur - prev)) / len;
      const double t = dot(cur - prev, d) / (len * len);
      if (off <= kGeomTolerance && t > 0.0 && t < 1.0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) {
  for (const auto& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::kInvalidArgument, "polygon vertex is not finite");
  }
  drop_repeats(vertices);
  if (vertices.size() < 3) throw Error(ErrorCode::kDegenerateHull, "polygon needs three distinct vertices");
  if (signed_area(vertices) < 0) std::reverse(vertices.begin(), vertices.end());
  drop_collinear(vertices);
  if (vertices.size() < 3 || std::abs(signed_area(vertices)) <= kGeomTolerance * kGeomTolerance)
    throw Error(ErrorCode::kDegenerateHull, "polygon vertices are collinear");

  double turning = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e0 = vertices[i] - vertices[(i + n - 1) % n];
    const Point2 e1 = vertices[(i + 1) % n] - vertices[i];
    const double c = cross(e0, e1);
    if (c <= 0.0) throw Error(ErrorCode::kNonConvex, "polygon has a reflex vertex");
    turning += std::atan2(c, dot(e0, e1));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) throw Error(ErrorCode::kNonConvex, "polygon winds more than once");
  vertices_ = std::move(vertices);
}

std::vector<Segment> ConvexPolygon::edges() const {
  std::vector<Segment> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertex(i + 1));
  return out;
}

double ConvexPolygon::perimeter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) s += distance(vertices_[i], vertex(i + 1));
  return s;
}

double ConvexPolygon::area() const { return signed_area(vertices_); }

Point2 ConvexPolygon::centroid() const {
  double a = 0.0;
  Point2 c;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 p = vertices_[i];
    const Point2 q = vertex(i + 1);
    const double w = cross(p, q);
    a += w;
    c = c + w * (p + q);
  }
  return (1.0 / (3.0 * a)) * c;
}

double ConvexPolygon::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) d = std::max(d, distance(vertices_[i], vertices_[j]));
  return d;
}

double ConvexPolygon::support(double alpha) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : vertices_) best = std::max(best, project_point(p, alpha));
  return best;
}

double ConvexPolygon::depth(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 e = vertex(i + 1) - vertices_[i];
    best = std::min(best, cross(e, p - vertices_[i]) / norm(e));
  }
  return best;
}

ConvexPolygon ConvexPolygon::rotated(double angle) const {
  std::vector<Point2> v;
  for (const auto& p : vertices_) v.push_back(rotate(p, angle));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::translated(Point2 offset) const {
  std::vector<Point2> v;
  for (const auto& p : vertices_) v.push_back(p + offset);
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double factor, Point2 center) const {
  std::vector<Point2> v;
  for (const auto& p : vertices_) v.push_back(center + factor * (p - center));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorCode::kDegenerateHull, "hull needs three distinct points");
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorCode::kDegenerateHull, "points are collinear");
  return ConvexPolygon(std::move(hull));
}

PolygonMetrics polygon_metrics(std::span<const Point2> points) {
  PolygonMetrics m;
  m.hull = convex_hull(points);
  m.perimeter = m.hull.perimeter();
  m.area = m.hull.area();
  return m;
}

ConvexPolygon axis_rectangle(double x0, double y0, double x1, double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon unit_square() { return axis_rectangle(-0.5, -0.5, 0.5, 0.5); }

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, Point2 normal, double offset) {
  const auto& v = poly.vertices();
  std::vector<Point2> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 p = v[i];
    const Point2 q = poly.vertex(i + 1);
    const double dp = dot(normal, p) - offset;
    const double dq = dot(normal, q) - offset;
    if (dp >= 0) out.push_back(p);
    if ((dp > 0 && dq < 0) || (dp < 0 && dq > 0)) out.push_back(p + (dp / (dp - dq)) * (q - p));
  }
  try {
    return ConvexPolygon(std::move(out));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<std::pair<double, double>> clip_segment(const Segment& s, const ConvexPolygon& poly, double inset) {
  double t0 = 0.0;
  double t1 = 1.0;
  const Point2 d = s.vector();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 p = poly.vertex(i);
    const Point2 e = poly.vertex(i + 1) - p;
    const double len = norm(e);
    // inward-normal distance of s(t) is c0 + t*c1
    const double c0 = cross(e, s.a() - p) / len - inset;
    const double c1 = cross(e, d) / len;
    if (c1 == 0.0) {
      if (c0 < 0) return std::nullopt;
    } else if (c1 > 0) {
      t0 = std::max(t0, -c0 / c1);
    } else {
      t1 = std::min(t1, -c0 / c1);
    }
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

bool meets_interior(const Segment& s, const ConvexPolygon& poly) {
  return clip_segment(s, poly, kGeomTolerance).has_value();
}

double point_segment_distance(Point2 p, const Segment& s) {
  const Point2 d = s.vector();
  const double t = std::clamp(dot(p - s.a(), d) / dot(d, d), 0.0, 1.0);
  return distance(p, s.at(t));
}

bool segments_intersect(const Segment& s, const Segment& t, double slack) {
  const double d1 = cross(s.vector(), t.a() - s.a());
  const double d2 = cross(s.vector(), t.b() - s.a());
  const double d3 = cross(t.vector(), s.a() - t.a());
  const double d4 = cross(t.vector(), s.b() - t.a());
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  const double m = std::min({point_segment_distance(t.a(), s), point_segment_distance(t.b(), s),
                             point_segment_distance(s.a(), t), point_segment_distance(s.b(), t)});
  return m <= slack;
}

double project_point(Point2 p, double alpha) { return p.x * std::cos(alpha) + p.y * std::sin(alpha); }

Interval project_segment(const Segment& s, double alpha) {
  return Interval::spanning(project_point(s.a(), alpha), project_point(s.b(), alpha));
}

Interval project_polygon(const ConvexPolygon& poly, double alpha) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& p : poly.vertices()) {
    const double v = project_point(p, alpha);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace opaque
