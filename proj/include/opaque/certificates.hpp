#pragma once

#include <span>
#include <string>
#include <vector>

#include "opaque/geometry.hpp"
#include "opaque/quadrature.hpp"

namespace opaque {

// Half the perimeter: no line barrier of a convex object is shorter.
double jones_bound(const ConvexPolygon& object);

struct WasteCertificate {
  double subset_length = 0.0;
  CertifiedIntegral clipped_integral;
  // (4 |B'| - integral - error) / 4; never overstates the waste
  double delta = 0.0;
  // jones bound + delta
  double bound = 0.0;
};

// Uses the certified clipped-coverage integral of the subset.
WasteCertificate waste_certificate(const ConvexPolygon& object, std::span<const Segment> subset,
                                   double tol = 1e-9);
// Same arithmetic from given numbers (p = half perimeter).
WasteCertificate waste_certificate(double half_perimeter, double subset_length, CertifiedIntegral clipped);

struct FarOutsideCertificate {
  // measure over [0, 2pi) of the angles at which b(alpha) meets U(alpha)
  double angle_set_measure = 0.0;
  double epsilon = 0.0;
  // 4 cos(epsilon): bound on the clipped-coverage integral per unit of |b|
  double factor = 4.0;
};

// Throws kPrecondition if b meets the interior of the object; touching is allowed.
FarOutsideCertificate far_outside_certificate(const Segment& b, const ConvexPolygon& object);

struct SegmentGroupConfig {
  std::vector<Segment> minus;
  std::vector<Segment> plus;
  std::size_t n = 0;
  double l = 0.0;
  double lambda = 0.0;
  double kappa = 0.0;
  double D = 0.0;

  double W() const;
};

struct GroupViolation {
  // 0 structural, 1 steepness, 2 disk, 3 band separation
  int clause = 0;
  // "minus", "plus" or "config"
  std::string family;
  std::size_t index = 0;
  std::string message;
};

std::vector<GroupViolation> validate_segment_group(const SegmentGroupConfig& cfg);
// 8nl - 2W^2/D; throws kPrecondition when the configuration is invalid.
double segment_group_bound(const SegmentGroupConfig& cfg);
// The bare formula, without any hypothesis check.
double segment_group_formula(std::size_t n, double l, double lambda, double kappa, double D);

}  // namespace opaque
