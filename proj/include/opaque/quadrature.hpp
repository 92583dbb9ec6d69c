#pragma once

#include <functional>
#include <limits>
#include <span>

namespace opaque {

struct CertifiedIntegral {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t evaluations = 0;
};

// A-priori regularity of the integrand on every piece between cuts.
struct Smoothness {
  double fourth_derivative = std::numeric_limits<double>::infinity();
  double lipschitz = std::numeric_limits<double>::infinity();
};

// Integrates f over [cuts.front(), cuts.back()], treating f as smooth between
// consecutive cuts. Composite Simpson with the classical H^5 f''''/2880 panel
// bound when the fourth derivative is bounded, otherwise the midpoint rule
// with the Lipschitz bound L h^2 / 4 per cell. Panel counts are chosen per
// piece so that the truncation bound stays below tol.
CertifiedIntegral integrate_piecewise(const std::function<double(double)>& f, std::span<const double> cuts,
                                      Smoothness smoothness, double tol);

}  // namespace opaque
