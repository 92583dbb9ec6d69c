#include "opaque/bands.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace opaque {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_common(std::span<const BandFunction> family) {
  for (const auto& b : family) {
    if (b.domain() != family.front().domain() || b.samples() != family.front().samples())
      throw Error(ErrorCode::kInvalidArgument, "band functions must share domain and sampling");
  }
}

double union_of_bands(std::span<const double> lows, std::span<const double> widths, std::vector<std::size_t>& order) {
  order.resize(lows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lows[a] < lows[b]; });
  double total = 0.0;
  double cur_lo = 0.0;
  double cur_hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i : order) {
    const double lo = lows[i];
    const double hi = lo + widths[i];
    if (lo > cur_hi) {
      if (cur_hi > cur_lo) total += cur_hi - cur_lo;
      cur_lo = lo;
      cur_hi = hi;
    } else {
      cur_hi = std::max(cur_hi, hi);
    }
  }
  if (cur_hi > cur_lo) total += cur_hi - cur_lo;
  return total;
}

// Integrates F(lows) over the domain, where F is continuous and linear as long
// as no two band endpoints cross. Every cell is split at the crossings, so the
// trapezoid rule is exact on each piece.
template <typename F>
CertifiedIntegral integrate_functional(std::span<const BandFunction> bands, F functional) {
  CertifiedIntegral out;
  if (bands.empty()) return out;
  check_common(bands);
  const std::size_t n = bands.size();
  const std::size_t samples = bands.front().samples();
  const double h = bands.front().step();
  std::vector<double> a(n), b(n), lows(n), widths(n);
  for (std::size_t i = 0; i < n; ++i) widths[i] = bands[i].width();
  std::vector<double> cuts;
  double abs_sum = 0.0;
  for (std::size_t k = 0; k + 1 < samples; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = bands[i].lower_at(k);
      b[i] = bands[i].lower_at(k + 1);
    }
    cuts.assign({0.0, 1.0});
    for (std::size_t i = 0; i < 2 * n; ++i) {
      for (std::size_t j = i + 1; j < 2 * n; ++j) {
        const double oi = i < n ? 0.0 : widths[i - n];
        const double oj = j < n ? 0.0 : widths[j - n];
        const double d0 = a[i % n] + oi - a[j % n] - oj;
        const double d1 = b[i % n] + oi - b[j % n] - oj;
        if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) cuts.push_back(d0 / (d0 - d1));
      }
    }
    std::sort(cuts.begin(), cuts.end());
    auto value_at = [&](double t) {
      for (std::size_t i = 0; i < n; ++i) lows[i] = a[i] + t * (b[i] - a[i]);
      return functional(std::span<const double>(lows), std::span<const double>(widths));
    };
    double prev_t = 0.0;
    double prev_v = value_at(0.0);
    out.evaluations += 1;
    for (std::size_t c = 1; c < cuts.size(); ++c) {
      const double t = cuts[c];
      if (t <= prev_t) continue;
      const double v = value_at(t);
      ++out.evaluations;
      const double term = 0.5 * (prev_v + v) * (t - prev_t) * h;
      out.value += term;
      abs_sum += std::abs(term);
      prev_t = t;
      prev_v = v;
    }
  }
  out.error_bound = (16.0 + static_cast<double>(out.evaluations)) * kEps * abs_sum;
  return out;
}

}  // namespace

BandFunction::BandFunction(Interval domain, std::vector<double> lower, double width, double lipschitz)
    : domain_(domain), lower_(std::move(lower)), width_(width), lipschitz_(lipschitz) {
  if (!(domain_.hi > domain_.lo)) throw Error(ErrorCode::kInvalidArgument, "band domain must have positive length");
  if (lower_.size() < 2) throw Error(ErrorCode::kInvalidArgument, "band needs at least two samples");
  if (!(width_ >= 0)) throw Error(ErrorCode::kInvalidArgument, "band width must be non-negative");
  if (!(lipschitz_ >= 0)) throw Error(ErrorCode::kInvalidArgument, "lipschitz bound must be non-negative");
  const double h = step();
  for (std::size_t k = 0; k + 1 < lower_.size(); ++k) {
    const double slope = std::abs(lower_[k + 1] - lower_[k]) / h;
    if (slope > lipschitz_ * (1.0 + 1e-9) + 1e-9) {
      std::ostringstream os;
      os << "band slope " << slope << " exceeds lipschitz bound " << lipschitz_ << " near sample " << k;
      throw Error(ErrorCode::kPrecondition, os.str());
    }
  }
}

BandFunction BandFunction::sample(Interval domain, const std::function<double(double)>& lower, double width,
                                  double lipschitz, std::size_t samples) {
  if (samples < 2) throw Error(ErrorCode::kInvalidArgument, "band needs at least two samples");
  std::vector<double> v(samples);
  const double h = domain.measure() / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k)
    v[k] = lower(k + 1 == samples ? domain.hi : domain.lo + h * static_cast<double>(k));
  return BandFunction(domain, std::move(v), width, lipschitz);
}

double BandFunction::angle_at(std::size_t k) const {
  if (k + 1 >= lower_.size()) return domain_.hi;
  return domain_.lo + step() * static_cast<double>(k);
}

double BandFunction::lower(double alpha) const {
  const double t = (alpha - domain_.lo) / step();
  if (t <= 0) return lower_.front();
  const auto last = static_cast<double>(lower_.size() - 1);
  if (t >= last) return lower_.back();
  const auto k = static_cast<std::size_t>(t);
  const double f = t - static_cast<double>(k);
  return lower_[k] + f * (lower_[k + 1] - lower_[k]);
}

BandFunction band_from_segment(const Segment& b, Interval domain, double width, std::size_t samples) {
  // smallest |b| |cos(alpha - theta)| over the domain: at an end, or 0 if a zero lies inside
  const double theta = b.angle();
  double min_cos = std::min(std::abs(std::cos(domain.lo - theta)), std::abs(std::cos(domain.hi - theta)));
  const double first_zero = theta + 0.5 * kPi + kPi * std::ceil((domain.lo - theta - 0.5 * kPi) / kPi);
  if (first_zero <= domain.hi) min_cos = 0.0;
  const double shortest = b.length() * min_cos;
  if (width > shortest + kGeomTolerance) {
    std::ostringstream os;
    os << "band width " << width << " exceeds the shortest projection " << shortest;
    throw Error(ErrorCode::kPrecondition, os.str());
  }
  const double lip = std::max(norm(b.a()), norm(b.b()));
  return BandFunction::sample(
      domain, [&](double alpha) { return project_segment(b, alpha).lo; }, width, lip, samples);
}

std::vector<BandFunction> simplify_bands(std::span<const BandFunction> family) {
  if (family.empty()) return {};
  check_common(family);
  const double w = family.front().width();
  double lip = 0.0;
  for (const auto& b : family) {
    if (std::abs(b.width() - w) > 1e-12 * std::max(1.0, w))
      throw Error(ErrorCode::kInvalidArgument, "band functions must share their width");
    lip = std::max(lip, b.lipschitz());
  }
  const std::size_t n = family.size();
  const std::size_t samples = family.front().samples();
  std::vector<std::vector<double>> out(n, std::vector<double>(samples));
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < samples; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return family[a].lower_at(k) < family[b].lower_at(k); });
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = family[order[i]].lower_at(k);
      const double v = i == 0 ? s : std::max(s, prev + w);
      out[i][k] = v;
      prev = v;
    }
  }
  std::vector<BandFunction> result;
  result.reserve(n);
  for (auto& lows : out) result.emplace_back(family.front().domain(), std::move(lows), w, lip);
  return result;
}

bool is_simple(std::span<const BandFunction> family, double slack) {
  if (family.empty()) return true;
  check_common(family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const bool above = family[j].lower_at(0) >= family[i].lower_at(0);
      const BandFunction& lo = above ? family[i] : family[j];
      const BandFunction& hi = above ? family[j] : family[i];
      for (std::size_t k = 0; k < lo.samples(); ++k) {
        if (hi.lower_at(k) < lo.lower_at(k) + lo.width() - slack) return false;
      }
    }
  }
  return true;
}

CertifiedIntegral union_area(std::span<const BandFunction> family) {
  std::vector<std::size_t> order;
  return integrate_functional(family, [&](std::span<const double> lows, std::span<const double> widths) {
    return union_of_bands(lows, widths, order);
  });
}

CertifiedIntegral overlap_area(const BandFunction& f, const BandFunction& g) {
  const BandFunction pair[] = {f, g};
  return integrate_functional(std::span<const BandFunction>(pair),
                              [](std::span<const double> lows, std::span<const double> widths) {
                                const double lo = std::max(lows[0], lows[1]);
                                const double hi = std::min(lows[0] + widths[0], lows[1] + widths[1]);
                                return std::max(0.0, hi - lo);
                              });
}

CrossingReport crossing_union_bound(std::span<const BandFunction> fs, std::span<const BandFunction> gs, double W,
                                    double D) {
  if (fs.empty() || fs.size() != gs.size())
    throw Error(ErrorCode::kInvalidArgument, "both families must contain the same positive number of bands");
  if (!(W >= 0)) throw Error(ErrorCode::kInvalidArgument, "W must be non-negative");
  if (!(D > 0)) throw Error(ErrorCode::kInvalidArgument, "D must be positive");
  std::vector<BandFunction> all(fs.begin(), fs.end());
  all.insert(all.end(), gs.begin(), gs.end());
  check_common(all);
  const double n = static_cast<double>(fs.size());
  const double w = W / n;
  for (const auto& b : all) {
    if (std::abs(b.width() - w) > 1e-12 * std::max(1.0, W))
      throw Error(ErrorCode::kPrecondition, "every band must have width W/n");
    if (b.lipschitz() > 0.5 * D + 1e-12) throw Error(ErrorCode::kPrecondition, "bands must be D/2-Lipschitz");
  }
  const Interval dom = fs.front().domain();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      const double start = gs[j].lower(dom.lo) - fs[i].upper(dom.lo);
      const double end = fs[i].lower(dom.hi) - gs[j].upper(dom.hi);
      if (start < W - kGeomTolerance || end < W - kGeomTolerance) {
        std::ostringstream os;
        os << "pair (f" << i << ", g" << j << ") violates the separation hypothesis at the "
           << (start < W - kGeomTolerance ? "start" : "end") << " of the domain";
        throw Error(ErrorCode::kPrecondition, os.str());
      }
    }
  }
  CrossingReport r;
  r.bound = 2.0 * W * dom.measure() - W * W / D;
  r.measured_union = union_area(all);
  return r;
}

}  // namespace opaque
