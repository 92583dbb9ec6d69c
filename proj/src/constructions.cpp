#include "opaque/constructions.hpp"

#include <algorithm>

namespace opaque {

std::string_view to_string(SquareBarrier variant) {
  switch (variant) {
    case SquareBarrier::kThreeSides: return "three-sides";
    case SquareBarrier::kDiagonals: return "diagonals";
    case SquareBarrier::kTwoSidesHalfDiagonal: return "two-sides-half-diagonal";
    case SquareBarrier::kHalfDiagonalSteiner: return "steiner";
  }
  return "unknown";
}

std::optional<SquareBarrier> parse_square_barrier(std::string_view name) {
  for (auto v : {SquareBarrier::kThreeSides, SquareBarrier::kDiagonals, SquareBarrier::kTwoSidesHalfDiagonal,
                 SquareBarrier::kHalfDiagonalSteiner}) {
    if (name == to_string(v)) return v;
  }
  return std::nullopt;
}

Scene make_square_barrier(SquareBarrier variant) {
  const Point2 ll{-0.5, -0.5};
  const Point2 lr{0.5, -0.5};
  const Point2 ur{0.5, 0.5};
  const Point2 ul{-0.5, 0.5};
  const Point2 centre{0.0, 0.0};
  Scene s;
  s.object = unit_square();
  switch (variant) {
    case SquareBarrier::kThreeSides:
      s.barrier = {Segment(ul, ll), Segment(ll, lr), Segment(lr, ur)};
      break;
    case SquareBarrier::kDiagonals:
      s.barrier = {Segment(ll, ur), Segment(lr, ul)};
      break;
    case SquareBarrier::kTwoSidesHalfDiagonal:
      s.barrier = {Segment(ul, ll), Segment(ll, lr), Segment(centre, ur)};
      break;
    case SquareBarrier::kHalfDiagonalSteiner: {
      const Point2 f = fermat_point(ll, lr, ul);
      s.barrier = {Segment(centre, ur), Segment(f, ll), Segment(f, lr), Segment(f, ul)};
      break;
    }
  }
  return s;
}

double square_barrier_length(SquareBarrier variant) {
  switch (variant) {
    case SquareBarrier::kThreeSides: return 3.0;
    case SquareBarrier::kDiagonals: return 2.0 * std::sqrt(2.0);
    case SquareBarrier::kTwoSidesHalfDiagonal: return 2.0 + 1.0 / std::sqrt(2.0);
    case SquareBarrier::kHalfDiagonalSteiner: return std::sqrt(2.0) + std::sqrt(6.0) / 2.0;
  }
  return 0.0;
}

Point2 fermat_point(Point2 a, Point2 b, Point2 c) {
  const double scale = std::max({distance(a, b), distance(b, c), distance(c, a)});
  if (scale <= kGeomTolerance || std::abs(cross(b - a, c - a)) <= kGeomTolerance * scale)
    throw Error(ErrorCode::kDegenerateHull, "fermat point of a collinear triple");
  auto angle_at = [](Point2 p, Point2 q, Point2 r) {
    const Point2 u = q - p;
    const Point2 v = r - p;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
  };
  const double A = angle_at(a, b, c);
  const double B = angle_at(b, c, a);
  const double C = angle_at(c, a, b);
  const double limit = 2.0 * kPi / 3.0;
  if (A >= limit) return a;
  if (B >= limit) return b;
  if (C >= limit) return c;
  // barycentric weights side * csc(angle + pi/3)
  const double wa = distance(b, c) / std::sin(A + kPi / 3.0);
  const double wb = distance(c, a) / std::sin(B + kPi / 3.0);
  const double wc = distance(a, b) / std::sin(C + kPi / 3.0);
  return (1.0 / (wa + wb + wc)) * (wa * a + wb * b + wc * c);
}

Polyline::Polyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Error(ErrorCode::kInvalidArgument, "polyline needs two vertices");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (distance(vertices_[i], vertices_[i + 1]) <= kGeomTolerance)
      throw Error(ErrorCode::kZeroLengthSegment, "polyline repeats a vertex");
  }
}

std::vector<Segment> Polyline::segments() const {
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

double Polyline::length() const {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) s += distance(vertices_[i], vertices_[i + 1]);
  return s;
}

Point2 Polyline::at_length(double s) const {
  if (s <= 0) return vertices_.front();
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const double e = distance(vertices_[i], vertices_[i + 1]);
    if (s <= e) return vertices_[i] + (s / e) * (vertices_[i + 1] - vertices_[i]);
    s -= e;
  }
  return vertices_.back();
}

std::vector<Segment> straighten(const Polyline& curve, double epsilon) {
  if (!(epsilon > 0)) throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  const auto& v = curve.vertices();
  if (v.size() == 2) return curve.segments();

  std::optional<ConvexPolygon> hull;
  try {
    hull = convex_hull(v);
  } catch (const Error&) {
    // collinear: the span of the curve blocks exactly the same lines
    const Point2 dir = v.back() - v.front() == Point2{} ? v[1] - v[0] : v.back() - v.front();
    auto key = [&](Point2 p) { return dot(p - v.front(), dir); };
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end(), [&](Point2 p, Point2 q) { return key(p) < key(q); });
    return {Segment(*lo, *hi)};
  }

  const Point2 c = hull->centroid();
  std::vector<Point2> magnified;
  for (const auto& p : v) magnified.push_back(c + (1.0 + epsilon) * (p - c));
  const Polyline big(std::move(magnified));
  const double total = big.length();

  for (std::size_t k = 2; k <= (std::size_t{1} << 20); k *= 2) {
    std::vector<Point2> samples;
    for (std::size_t j = 0; j <= k; ++j) {
      const Point2 p = big.at_length(total * static_cast<double>(j) / static_cast<double>(k));
      if (samples.empty() || distance(samples.back(), p) > kGeomTolerance) samples.push_back(p);
    }
    ConvexPolygon out_hull;
    try {
      out_hull = convex_hull(samples);
    } catch (const Error&) {
      continue;
    }
    const bool inside = std::all_of(hull->vertices().begin(), hull->vertices().end(),
                                    [&](Point2 p) { return out_hull.depth(p) > kGeomTolerance; });
    if (inside) return Polyline(std::move(samples)).segments();
  }
  throw Error(ErrorCode::kPrecondition, "straightening did not reach strict hull containment");
}

}  // namespace opaque
