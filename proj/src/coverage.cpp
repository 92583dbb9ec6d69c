#include "opaque/coverage.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "opaque/arrangement.hpp"

namespace opaque {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Points of a scene with stable ids for exact tie detection.
struct PointIndex {
  std::vector<Point2> points;

  explicit PointIndex(std::vector<Point2> all) : points(unique_points(all)) {}
  int id(Point2 p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    return static_cast<int>(it - points.begin());
  }
};

struct TaggedPoint {
  Point2 p;
  int id = -1;
};

class LineProbe {
 public:
  explicit LineProbe(const Scene& scene) : index_(collect(scene)) {
    for (const auto& v : scene.object.vertices()) object_.push_back({v, index_.id(v)});
    for (const auto& s : scene.barrier) barrier_.push_back({{s.a(), index_.id(s.a())}, {s.b(), index_.id(s.b())}});
    Point2 c;
    for (const auto& p : index_.points) c = c + p;
    c = (1.0 / static_cast<double>(index_.points.size())) * c;
    for (const auto& p : index_.points) cap_ = std::max(cap_, 2.0 * distance(p, c));
  }

  const std::vector<Point2>& points() const { return index_.points; }

  double slack(double alpha) const {
    const Point2 u = unit_direction(alpha);
    TaggedInterval target{kInf, -kInf, -1, -1};
    for (const auto& v : object_) {
      const double x = dot(v.p, u);
      if (x < target.lo) { target.lo = x; target.lo_id = v.id; }
      if (x > target.hi) { target.hi = x; target.hi_id = v.id; }
    }
    std::vector<TaggedInterval> parts;
    parts.reserve(barrier_.size());
    for (const auto& [a, b] : barrier_) {
      const double xa = dot(a.p, u);
      const double xb = dot(b.p, u);
      parts.push_back(xa <= xb ? TaggedInterval{xa, xb, a.id, b.id} : TaggedInterval{xb, xa, b.id, a.id});
    }
    return std::min(chain_slack(target, parts), cap_);
  }

 private:
  static std::vector<Point2> collect(const Scene& scene) {
    std::vector<Point2> all = scene.object.vertices();
    for (const auto& s : scene.barrier) {
      all.push_back(s.a());
      all.push_back(s.b());
    }
    return all;
  }

  PointIndex index_;
  std::vector<TaggedPoint> object_;
  std::vector<std::pair<TaggedPoint, TaggedPoint>> barrier_;
  double cap_ = 0.0;
};

// Exact measure of the union of intervals, optionally clipped.
double union_measure(std::vector<Interval>& parts, std::optional<Interval> clip) {
  if (clip) {
    for (auto& iv : parts) {
      iv.lo = std::max(iv.lo, clip->lo);
      iv.hi = std::min(iv.hi, clip->hi);
    }
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double total = 0.0;
  double cur_lo = 0.0;
  double cur_hi = -kInf;
  for (const auto& iv : parts) {
    if (iv.hi <= iv.lo) continue;
    if (iv.lo > cur_hi) {
      if (cur_hi > cur_lo) total += cur_hi - cur_lo;
      cur_lo = iv.lo;
      cur_hi = iv.hi;
    } else {
      cur_hi = std::max(cur_hi, iv.hi);
    }
  }
  if (cur_hi > cur_lo) total += cur_hi - cur_lo;
  return total;
}

CertifiedIntegral integrate_coverage(std::span<const Segment> barrier, const ConvexPolygon* clip, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (barrier.empty()) return {};
  std::vector<Point2> pts;
  for (const auto& s : barrier) {
    pts.push_back(s.a());
    pts.push_back(s.b());
  }
  if (clip) pts.insert(pts.end(), clip->vertices().begin(), clip->vertices().end());
  pts = unique_points(pts);
  Point2 c;
  for (const auto& p : pts) c = c + p;
  c = (1.0 / static_cast<double>(pts.size())) * c;
  double amplitude = 0.0;
  for (const auto& p : pts) amplitude += distance(p, c);

  auto cuts = coincidence_angles(pts);
  cuts.push_back(kPi);
  std::vector<Interval> scratch;
  auto f = [&](double alpha) {
    const Point2 u = unit_direction(alpha);
    scratch.clear();
    for (const auto& s : barrier) scratch.push_back(Interval::spanning(dot(s.a(), u), dot(s.b(), u)));
    std::optional<Interval> window;
    if (clip) window = project_polygon(*clip, alpha);
    return union_measure(scratch, window);
  };
  // pi-periodic integrand: integrate half the circle and double
  CertifiedIntegral half = integrate_piecewise(f, cuts, {amplitude, kInf}, 0.5 * tol);
  return {2.0 * half.value, 2.0 * half.error_bound, half.evaluations};
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kCertified: return "certified";
    case VerdictKind::kWitness: return "witness";
    case VerdictKind::kUnresolved: return "unresolved";
  }
  return "unknown";
}

IntervalSet barrier_projection(std::span<const Segment> barrier, double alpha) {
  std::vector<Interval> parts;
  for (const auto& s : barrier) parts.push_back(project_segment(s, alpha));
  return IntervalSet(std::move(parts));
}

IntervalSet coverage_gap(const ConvexPolygon& object, std::span<const Segment> barrier, double alpha) {
  if (object.empty()) return {};
  return IntervalSet{project_polygon(object, alpha)}.subtract(barrier_projection(barrier, alpha));
}

bool line_blocked(std::span<const Segment> barrier, const LineWitness& line, double slack) {
  for (const auto& s : barrier) {
    if (project_segment(s, line.angle).contains(line.offset, slack)) return true;
  }
  return false;
}

bool witness_is_valid(const Scene& scene, const LineWitness& line) {
  if (!project_polygon(scene.object, line.angle).contains(line.offset)) return false;
  return barrier_projection(scene.barrier, line.angle).distance_to(line.offset) > kGeomTolerance;
}

Verdict verify_line_barrier(const Scene& scene, double tol) {
  if (scene.object.empty()) throw Error(ErrorCode::kPrecondition, "scene has no object");
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");

  const LineProbe probe(scene);
  const auto arcs = arcs_between(coincidence_angles(probe.points()), kPi);

  Verdict v;
  v.arcs = arcs.size();
  v.margin = kInf;
  std::vector<std::pair<double, std::size_t>> uncovered;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    double s = probe.slack(arcs[k].mid());
    if (s < tol) s = std::max({s, probe.slack(arcs[k].at(0.25)), probe.slack(arcs[k].at(0.75))});
    v.margin = std::min(v.margin, s);
    if (s < 0) uncovered.emplace_back(s, k);
  }

  if (!uncovered.empty()) {
    std::sort(uncovered.begin(), uncovered.end());
    const std::size_t tries = std::min<std::size_t>(uncovered.size(), 32);
    for (std::size_t t = 0; t < tries; ++t) {
      const Arc& arc = arcs[uncovered[t].second];
      for (int step : {8, 9, 7, 10, 6, 11, 5, 12, 4, 13, 3, 14, 2, 15, 1}) {
        const double alpha = arc.at(static_cast<double>(step) / 16.0);
        const auto gap = coverage_gap(scene.object, scene.barrier, alpha);
        const Interval* widest = nullptr;
        for (const auto& iv : gap.parts()) {
          if (!widest || iv.measure() > widest->measure()) widest = &iv;
        }
        if (!widest || widest->measure() <= 2.0 * kGeomTolerance) continue;
        const LineWitness w{alpha, 0.5 * (widest->lo + widest->hi)};
        if (!witness_is_valid(scene, w)) continue;
        v.kind = VerdictKind::kWitness;
        v.line_witness = w;
        std::ostringstream os;
        os.precision(17);
        os << "line at angle " << w.angle << " offset " << w.offset << " misses the barrier (gap "
           << widest->measure() << ")";
        v.detail = os.str();
        return v;
      }
    }
    v.kind = VerdictKind::kUnresolved;
    v.detail = "uncovered angles found but every gap is thinner than the geometric tolerance";
    return v;
  }

  std::ostringstream os;
  os.precision(17);
  if (v.margin >= tol) {
    v.kind = VerdictKind::kCertified;
    os << "every line direction covered, minimal slack " << v.margin;
  } else {
    v.kind = VerdictKind::kUnresolved;
    os << "minimal slack " << v.margin << " below tolerance " << tol;
  }
  v.detail = os.str();
  return v;
}

CertifiedIntegral integrate_projection_length(std::span<const Segment> barrier) {
  return {4.0 * total_length(barrier), 0.0, 0};
}

CertifiedIntegral integrate_width(const ConvexPolygon& object, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (object.empty()) return {};
  auto cuts = coincidence_angles(object.vertices());
  cuts.push_back(kPi);
  auto f = [&](double alpha) { return project_polygon(object, alpha).measure(); };
  CertifiedIntegral half = integrate_piecewise(f, cuts, {object.diameter(), kInf}, 0.5 * tol);
  return {2.0 * half.value, 2.0 * half.error_bound, half.evaluations};
}

CertifiedIntegral integrate_clipped_coverage(std::span<const Segment> subset, const ConvexPolygon& object,
                                             double tol) {
  if (object.empty()) throw Error(ErrorCode::kPrecondition, "clipping object is empty");
  return integrate_coverage(subset, &object, tol);
}

CertifiedIntegral integrate_union_projection(std::span<const Segment> barrier, double tol) {
  return integrate_coverage(barrier, nullptr, tol);
}

}  // namespace opaque
