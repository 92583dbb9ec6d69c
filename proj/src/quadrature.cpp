#include "opaque/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "opaque/error.hpp"

namespace opaque {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxPanelsPerPiece = std::size_t{1} << 22;

std::size_t panel_count(double needed) {
  if (!(needed < static_cast<double>(kMaxPanelsPerPiece))) return kMaxPanelsPerPiece;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(needed)));
}

}  // namespace

CertifiedIntegral integrate_piecewise(const std::function<double(double)>& f, std::span<const double> cuts,
                                      Smoothness smoothness, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "quadrature tolerance must be positive");
  if (cuts.size() < 2) throw Error(ErrorCode::kInvalidArgument, "quadrature needs at least two cut points");
  const double total = cuts.back() - cuts.front();
  CertifiedIntegral out;
  if (total <= 0) return out;

  const bool simpson = std::isfinite(smoothness.fourth_derivative);
  if (!simpson && !std::isfinite(smoothness.lipschitz))
    throw Error(ErrorCode::kInvalidArgument, "integrand has no regularity bound");
  double abs_sum = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    const double len = b - a;
    if (len <= 0) continue;
    const double share = tol * len / total;
    if (simpson) {
      const double m4 = smoothness.fourth_derivative;
      const std::size_t m = panel_count(std::pow(std::pow(len, 5) * m4 / (2880.0 * share), 0.25));
      const double h = len / static_cast<double>(m);
      double piece = 0.0;
      double fa = f(a);
      ++out.evaluations;
      for (std::size_t i = 0; i < m; ++i) {
        const double x0 = a + h * static_cast<double>(i);
        const double x1 = i + 1 == m ? b : x0 + h;
        const double fm = f(0.5 * (x0 + x1));
        const double fb = f(x1);
        out.evaluations += 2;
        const double w = (x1 - x0) / 6.0;
        piece += w * (fa + 4.0 * fm + fb);
        abs_sum += w * (std::abs(fa) + 4.0 * std::abs(fm) + std::abs(fb));
        fa = fb;
      }
      out.value += piece;
      out.error_bound += static_cast<double>(m) * std::pow(h, 5) * m4 / 2880.0;
    } else {
      const double lip = smoothness.lipschitz;
      const std::size_t m = panel_count(len * len * lip / (4.0 * share));
      const double h = len / static_cast<double>(m);
      for (std::size_t i = 0; i < m; ++i) {
        const double v = f(a + h * (static_cast<double>(i) + 0.5));
        ++out.evaluations;
        out.value += h * v;
        abs_sum += h * std::abs(v);
      }
      out.error_bound += static_cast<double>(m) * lip * h * h / 4.0;
    }
  }
  // evaluation rounding plus the recursive-summation bound
  out.error_bound += (16.0 + static_cast<double>(out.evaluations)) * kEps * abs_sum;
  return out;
}

}  // namespace opaque
