#pragma once

#include <functional>
#include <span>
#include <vector>

#include "opaque/geometry.hpp"
#include "opaque/quadrature.hpp"

namespace opaque {

inline constexpr std::size_t kDefaultBandSamples = 4096;

// Interval-valued function alpha -> [lower(alpha), lower(alpha) + width] on an
// angle interval. lower is the linear interpolant of uniform samples; the
// interpolant itself is the function (so areas below are exact up to rounding).
class BandFunction {
 public:
  // Throws kPrecondition if consecutive samples violate the Lipschitz bound.
  BandFunction(Interval domain, std::vector<double> lower, double width, double lipschitz);

  static BandFunction sample(Interval domain, const std::function<double(double)>& lower, double width,
                             double lipschitz, std::size_t samples = kDefaultBandSamples);

  const Interval& domain() const { return domain_; }
  std::size_t samples() const { return lower_.size(); }
  double step() const { return domain_.measure() / static_cast<double>(lower_.size() - 1); }
  double angle_at(std::size_t k) const;
  double lower_at(std::size_t k) const { return lower_[k]; }
  const std::vector<double>& lower_samples() const { return lower_; }
  double width() const { return width_; }
  double lipschitz() const { return lipschitz_; }

  double lower(double alpha) const;
  double upper(double alpha) const { return lower(alpha) + width_; }
  Interval band(double alpha) const { return {lower(alpha), upper(alpha)}; }

 private:
  Interval domain_;
  std::vector<double> lower_;
  double width_ = 0.0;
  double lipschitz_ = 0.0;
};

// alpha -> [min b(alpha), min b(alpha) + width]. Requires |b(alpha)| >= width on the domain.
BandFunction band_from_segment(const Segment& b, Interval domain, double width,
                               std::size_t samples = kDefaultBandSamples);

// Sorts the lower endpoints at every sample and pushes each band up until it
// clears the one below. The result is simple, covers at least the input union
// and keeps the Lipschitz bound; band i moves up by at most i * width.
std::vector<BandFunction> simplify_bands(std::span<const BandFunction> family);

// True if consecutive bands (in sample order) never overlap by more than slack.
bool is_simple(std::span<const BandFunction> family, double slack = 1e-12);

// Area of the union of the graphs over the common domain.
CertifiedIntegral union_area(std::span<const BandFunction> family);
// Area of the intersection of two graphs.
CertifiedIntegral overlap_area(const BandFunction& f, const BandFunction& g);

struct CrossingReport {
  double bound = 0.0;
  CertifiedIntegral measured_union;
};

// Checks the hypotheses (equal counts, width W/n, lipschitz <= D/2, every g_j
// at least W above every f_i at the start and W below at the end) and returns
// 2W|I| - W^2/D together with the measured union area.
CrossingReport crossing_union_bound(std::span<const BandFunction> fs, std::span<const BandFunction> gs, double W,
                                    double D);

}  // namespace opaque
