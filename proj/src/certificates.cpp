#include "opaque/certificates.hpp"

#include <algorithm>
#include <sstream>

#include "opaque/arrangement.hpp"
#include "opaque/coverage.hpp"

namespace opaque {

double jones_bound(const ConvexPolygon& object) { return 0.5 * object.perimeter(); }

WasteCertificate waste_certificate(double half_perimeter, double subset_length, CertifiedIntegral clipped) {
  WasteCertificate c;
  c.subset_length = subset_length;
  c.clipped_integral = clipped;
  c.delta = (4.0 * subset_length - clipped.value) / 4.0 - clipped.error_bound / 4.0;
  c.bound = half_perimeter + c.delta;
  return c;
}

WasteCertificate waste_certificate(const ConvexPolygon& object, std::span<const Segment> subset, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  return waste_certificate(jones_bound(object), total_length(subset), integrate_clipped_coverage(subset, object, tol));
}

FarOutsideCertificate far_outside_certificate(const Segment& b, const ConvexPolygon& object) {
  if (object.empty()) throw Error(ErrorCode::kPrecondition, "object is empty");
  if (meets_interior(b, object)) throw Error(ErrorCode::kPrecondition, "segment meets the interior of the object");
  std::vector<Point2> pts = object.vertices();
  pts.push_back(b.a());
  pts.push_back(b.b());
  // overlap of the two projections only changes where two points project equally
  double half = 0.0;
  for (const Arc& arc : arcs_between(coincidence_angles(pts), kPi)) {
    const double alpha = arc.mid();
    const Interval u = project_polygon(object, alpha);
    const Interval s = project_segment(b, alpha);
    if (std::max(u.lo, s.lo) <= std::min(u.hi, s.hi)) half += arc.hi - arc.lo;
  }
  FarOutsideCertificate c;
  c.angle_set_measure = std::min(2.0 * half, kTwoPi);
  c.epsilon = (kTwoPi - c.angle_set_measure) / 4.0;
  c.factor = 4.0 * std::cos(c.epsilon);
  return c;
}

double SegmentGroupConfig::W() const { return static_cast<double>(n) * l * std::sin(lambda - kappa); }

double segment_group_formula(std::size_t n, double l, double lambda, double kappa, double D) {
  const double w = static_cast<double>(n) * l * std::sin(lambda - kappa);
  if (w == 0.0) return 8.0 * static_cast<double>(n) * l;
  return 8.0 * static_cast<double>(n) * l - 2.0 * w * w / D;
}

std::vector<GroupViolation> validate_segment_group(const SegmentGroupConfig& cfg) {
  std::vector<GroupViolation> out;
  auto config_error = [&](const std::string& msg) { out.push_back({0, "config", 0, msg}); };
  if (!(cfg.kappa > 0 && cfg.kappa < cfg.lambda && cfg.lambda < 0.5 * kPi))
    config_error("angles must satisfy 0 < kappa < lambda < pi/2");
  if (!(cfg.l > 0)) config_error("segment length must be positive");
  if (!(cfg.D > 0)) config_error("disk diameter must be positive");
  if (cfg.minus.size() != cfg.n || cfg.plus.size() != cfg.n)
    config_error("each family must contain exactly n segments");

  const double w = cfg.W();
  const double sk = std::sin(cfg.kappa);
  const double ck = std::cos(cfg.kappa);
  auto check = [&](const std::vector<Segment>& family, const char* name, double sign) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Segment& s = family[i];
      auto report = [&](int clause, const std::string& msg) { out.push_back({clause, name, i, msg}); };
      if (std::abs(s.length() - cfg.l) > kGeomTolerance) report(0, "segment length differs from l");
      const double theta = s.angle();
      if (!(std::min(theta, kPi - theta) > cfg.lambda)) report(1, "segment is not steeper than lambda");
      for (Point2 p : {s.a(), s.b()}) {
        if (norm(p) > 0.5 * cfg.D + kGeomTolerance) {
          report(2, "endpoint outside the disk of diameter D");
          break;
        }
      }
      for (Point2 p : {s.a(), s.b()}) {
        const double u = sign * (p.x * sk + p.y * ck);
        const double v = sign * (p.x * sk - p.y * ck);
        if (u < 0.5 * w - kGeomTolerance || v < 0.5 * w - kGeomTolerance) {
          report(3, "endpoint inside the separating bands");
          break;
        }
      }
    }
  };
  check(cfg.minus, "minus", -1.0);
  check(cfg.plus, "plus", 1.0);
  return out;
}

double segment_group_bound(const SegmentGroupConfig& cfg) {
  const auto violations = validate_segment_group(cfg);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "segment group hypothesis " << violations.front().clause << " fails for " << violations.front().family
       << "[" << violations.front().index << "]: " << violations.front().message;
    throw Error(ErrorCode::kPrecondition, os.str());
  }
  return segment_group_formula(cfg.n, cfg.l, cfg.lambda, cfg.kappa, cfg.D);
}

}  // namespace opaque
