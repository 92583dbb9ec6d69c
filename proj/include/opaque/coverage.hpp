#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "opaque/geometry.hpp"
#include "opaque/interval_set.hpp"
#include "opaque/quadrature.hpp"

namespace opaque {

inline constexpr double kDefaultTolerance = 1e-7;

enum class VerdictKind { kCertified, kWitness, kUnresolved };
std::string_view to_string(VerdictKind kind);

// The line {p : project_point(p, angle) == offset}.
struct LineWitness {
  double angle = 0.0;
  double offset = 0.0;
};

// The half-line origin + t * unit_direction(direction), t >= 0.
struct RayWitness {
  Point2 origin;
  double direction = 0.0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::kUnresolved;
  // smallest coverage slack found over the sweep (length units)
  double margin = 0.0;
  std::optional<LineWitness> line_witness;
  std::optional<RayWitness> ray_witness;
  std::string detail;
  std::size_t arcs = 0;
};

// B(alpha): union of the barrier's projections.
IntervalSet barrier_projection(std::span<const Segment> barrier, double alpha);
// U(alpha) \ B(alpha).
IntervalSet coverage_gap(const ConvexPolygon& object, std::span<const Segment> barrier, double alpha);
// Does some segment meet the line (angle, offset) within slack?
bool line_blocked(std::span<const Segment> barrier, const LineWitness& line, double slack = kGeomTolerance);
// A witness is valid when the line meets the object but misses the barrier by more than the tolerance.
bool witness_is_valid(const Scene& scene, const LineWitness& line);

// Decides whether the barrier meets every line that meets the object.
// The sweep over [0, pi) is cut at every angle where two scene points project
// to the same value; coverage is combinatorially constant between cuts, so
// sampling each arc decides it. margin is the smallest widest-chain slack.
Verdict verify_line_barrier(const Scene& scene, double tol = kDefaultTolerance);

// Integral over [0, 2pi) of sum_b |b(alpha)|, in closed form (4 * total length).
CertifiedIntegral integrate_projection_length(std::span<const Segment> barrier);
// Integral over [0, 2pi) of |U(alpha)|.
CertifiedIntegral integrate_width(const ConvexPolygon& object, double tol = 1e-9);
// Integral over [0, 2pi) of |B'(alpha) intersected with U(alpha)|.
CertifiedIntegral integrate_clipped_coverage(std::span<const Segment> subset, const ConvexPolygon& object,
                                             double tol = 1e-9);
// Integral over [0, 2pi) of |B(alpha)|.
CertifiedIntegral integrate_union_projection(std::span<const Segment> barrier, double tol = 1e-9);

}  // namespace opaque
