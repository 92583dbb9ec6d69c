#include "opaque/arrangement.hpp"

#include <algorithm>
#include <limits>

namespace opaque {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Critical angles closer than this are merged; the skipped arc is too thin to matter.
constexpr double kAngleMerge = 1e-13;

std::vector<double> sorted_unique(std::vector<double> v, double period) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double a : v) {
    if (out.empty() || a - out.back() > kAngleMerge) out.push_back(a);
  }
  if (out.size() > 1 && out.back() > period - kAngleMerge) out.pop_back();
  return out;
}

double gap(double hi, int hi_id, double lo, int lo_id) {
  if (hi_id >= 0 && hi_id == lo_id) return kInf;
  const double d = hi - lo;
  return d == 0.0 ? kInf : d;
}

}  // namespace

std::vector<Point2> unique_points(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> coincidence_angles(std::span<const Point2> points) {
  const auto pts = unique_points(points);
  std::vector<double> angles{0.0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point2 d = pts[j] - pts[i];
      angles.push_back(canonical_direction(std::atan2(d.y, d.x) + 0.5 * kPi));
    }
  }
  return sorted_unique(std::move(angles), kPi);
}

std::vector<double> pair_directions(std::span<const Point2> points) {
  const auto pts = unique_points(points);
  std::vector<double> angles{0.0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point2 d = pts[j] - pts[i];
      const double a = canonical_angle(std::atan2(d.y, d.x));
      angles.push_back(a);
      angles.push_back(canonical_angle(a + kPi));
    }
  }
  return sorted_unique(std::move(angles), kTwoPi);
}

std::vector<Arc> arcs_between(std::vector<double> cuts, double period) {
  for (auto& c : cuts) c = std::fmod(std::fmod(c, period) + period, period);
  cuts.push_back(0.0);
  cuts = sorted_unique(std::move(cuts), period);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double hi = i + 1 < cuts.size() ? cuts[i + 1] : period;
    arcs.push_back({cuts[i], hi});
  }
  return arcs;
}

double chain_slack(const TaggedInterval& target, std::span<const TaggedInterval> parts) {
  const std::size_t n = parts.size();
  if (n == 0) return -kInf;
  // maximin Dijkstra over "covered from target.lo up to parts[i].hi"
  std::vector<double> best(n);
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) best[i] = gap(target.lo, target.lo_id, parts[i].lo, parts[i].lo_id);
  double result = -kInf;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && (pick == n || best[i] > best[pick])) pick = i;
    }
    if (pick == n || best[pick] <= result) break;
    done[pick] = true;
    const TaggedInterval& p = parts[pick];
    result = std::max(result, std::min(best[pick], gap(p.hi, p.hi_id, target.hi, target.hi_id)));
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      best[j] = std::max(best[j], std::min(best[pick], gap(p.hi, p.hi_id, parts[j].lo, parts[j].lo_id)));
    }
  }
  return result;
}

}  // namespace opaque
