#include "opaque/square_theorem.hpp"

#include <algorithm>
#include <cstdint>

#include "opaque/certificates.hpp"

namespace opaque {

namespace {

ChainRow row(std::string name, double value, std::string inequality, double threshold, bool below, bool strict) {
  ChainRow r;
  r.name = std::move(name);
  r.value = value;
  r.inequality = std::move(inequality);
  r.slack = below ? threshold - value : value - threshold;
  r.holds = strict ? r.slack > 0 : r.slack >= 0;
  return r;
}

}  // namespace

OctagonScene build_octagon() {
  OctagonScene s;
  s.square = unit_square();
  const double a = 0.5 + kOctagonHeight;
  s.octagon = ConvexPolygon(
      {{a, 0}, {0.5, 0.5}, {0, a}, {-0.5, 0.5}, {-a, 0}, {-0.5, -0.5}, {0, -a}, {0.5, -0.5}});
  s.regions = corner_regions(s);
  return s;
}

std::array<ConvexPolygon, 4> corner_regions(const OctagonScene& scene) {
  auto strip = clip_halfplane(scene.octagon, {1, 1}, 7.0 / 8.0);
  if (strip) strip = clip_halfplane(*strip, {-1, -1}, -1.0);
  if (!strip) throw Error(ErrorCode::kPrecondition, "corner strip misses the octagon");
  std::array<ConvexPolygon, 4> r;
  r[0] = *strip;
  for (int k = 1; k < 4; ++k) r[k] = strip->rotated(0.5 * kPi * k);
  return r;
}

double projection_gap(const OctagonScene& scene, int i, int j, double alpha) {
  const Interval a = project_polygon(scene.regions.at(static_cast<std::size_t>(i)), alpha);
  const Interval b = project_polygon(scene.regions.at(static_cast<std::size_t>(j)), alpha);
  return std::max(a.lo - b.hi, b.lo - a.hi);
}

AnglePartition angle_partition(std::span<const Segment> segments, int region) {
  AnglePartition p;
  p.region = ((region % 4) + 4) % 4;
  for (int k = 0; k < 3; ++k) p.targets[static_cast<std::size_t>(k)] = (p.region + k + 1) % 4;
  const double base = 0.5 * kPi * p.region;
  const double lo = base - 0.25 * kPi;
  for (const auto& s : segments) {
    // lift the direction into [lo, lo + pi)
    double t = s.angle();
    t += kPi * std::ceil((lo - t) / kPi);
    if (t >= lo + kPi) t -= kPi;
    std::size_t cls = 2;
    if (t < base + kPi / 8.0) cls = 0;
    else if (t < base + 3.0 * kPi / 8.0) cls = 1;
    p.classes[cls].push_back(s);
  }
  return p;
}

bool ConstantChainReport::reproduced() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const ChainRow& r) { return r.holds; });
}

ConstantChainReport reproduce_theorem_constants() {
  ConstantChainReport rep;
  const double half_angle = 0.5 * std::atan(29.0 / 295.0);
  rep.rows.push_back(row("far-outside factor", 4.0 * std::cos(half_angle), "4 cos(atan(29/295)/2) < 4 - 0.0048",
                         4.0 - 0.0048, true, true));

  // 0.0048 * (1/60) against 0.00008, compared as integers: 48/10^4/60 vs 8/10^5
  {
    const std::int64_t lhs = 48 * 100000;
    const std::int64_t rhs = 8 * 10000 * 60;
    ChainRow r;
    r.name = "outside waste";
    r.value = 0.0048 / 60.0;
    r.inequality = "0.0048 * (1/60) >= 0.00008";
    r.slack = static_cast<double>(lhs - rhs) / (10000.0 * 100000.0 * 60.0);
    r.holds = lhs >= rhs;
    rep.rows.push_back(r);
  }

  rep.rows.push_back(row("corner budget 2 eta", std::sqrt(2.0) / 16.0 - 1.0 / 60.0, "sqrt(2)/16 - 1/60 > 0.07172",
                         0.07172, false, true));

  const double gap = 7.0 / 8.0 * std::sin(kKappa) - (1.0 / 8.0 + 2.0 * 29.0 / 2128.0) * std::cos(kKappa);
  rep.rows.push_back(row("band gap", gap, "7/8 sin k - (1/8 + 2*29/2128) cos k > 0.008", 0.008, false, true));

  const double w = kEta * std::sin(kLambda - kKappa);
  rep.rows.push_back(row("band width W", w, "0.03586 sin(pi/8 - 0.1813) < 0.008", 0.008, true, true));

  const double deficit = 2.0 * w * w / std::sqrt(2.0);
  rep.rows.push_back(row("group deficit", deficit, "2 W^2 / sqrt(2) > 0.00008", 0.00008, false, true));

  // waste 4|B'| - integral = 4 * 0.07172 - (8 * 0.03586 - 0.00008), in units of 1e-5
  const std::int64_t waste_units = 4 * 7172 - (8 * 3586 - 8);
  const std::int64_t bound_units = 200000 + waste_units / 4;
  const WasteCertificate cert = waste_certificate(2.0, 0.07172, {8.0 * kEta - 0.00008, 0.0, 0});
  {
    ChainRow r;
    r.name = "lower bound";
    r.value = cert.bound;
    r.inequality = "2 + 0.00008/4 = 2.00002";
    r.slack = std::abs(cert.bound - 2.00002);
    r.holds = waste_units % 4 == 0 && bound_units == 200002 && r.slack <= 1e-12;
    rep.rows.push_back(r);
  }
  rep.lower_bound = cert.bound;
  return rep;
}

SegmentGroupConfig theorem_group_config() {
  SegmentGroupConfig cfg;
  cfg.n = 1;
  cfg.l = kEta;
  cfg.lambda = kLambda;
  cfg.kappa = kKappa;
  cfg.D = std::sqrt(2.0);
  cfg.minus = {Segment({-0.2, -0.5 * kEta}, {-0.2, 0.5 * kEta})};
  cfg.plus = {Segment({0.2, -0.5 * kEta}, {0.2, 0.5 * kEta})};
  return cfg;
}

double visual_angle(Point2 x, const ConvexPolygon& object) {
  if (object.empty()) return 0.0;
  if (object.contains(x)) return kPi;
  const Point2 c = object.centroid() - x;
  const double base = std::atan2(c.y, c.x);
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& v : object.vertices()) {
    const Point2 d = v - x;
    double a = std::atan2(d.y, d.x) - base;
    a = std::remainder(a, kTwoPi);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return std::min(hi - lo, kPi);
}

bool s_delta_contains(Point2 x, const ConvexPolygon& object, double delta) {
  if (!(delta > 0 && delta < 1)) throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  return 1.0 - visual_angle(x, object) / kPi < delta;
}

double barrier_length_in_slab(std::span<const Segment> barrier, Point2 normal, double lo, double hi) {
  double total = 0.0;
  for (const auto& s : barrier) {
    const double pa = dot(normal, s.a());
    const double pb = dot(normal, s.b());
    double t0 = 0.0;
    double t1 = 1.0;
    if (pa == pb) {
      if (pa < lo || pa > hi) continue;
    } else {
      double u0 = (lo - pa) / (pb - pa);
      double u1 = (hi - pa) / (pb - pa);
      if (u0 > u1) std::swap(u0, u1);
      t0 = std::max(t0, u0);
      t1 = std::min(t1, u1);
      if (t0 >= t1) continue;
    }
    total += (t1 - t0) * s.length();
  }
  return total;
}

}  // namespace opaque
