#pragma once

// Random scene generators and brute-force oracles shared by the test binaries.
// Oracles here deliberately avoid the library's predicates.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "opaque/bands.hpp"
#include "opaque/certificates.hpp"
#include "opaque/geometry.hpp"

namespace testkit {

using opaque::ConvexPolygon;
using opaque::kPi;
using opaque::Point2;
using opaque::Segment;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Vertices on a rotated, translated ellipse at random angles.
inline ConvexPolygon random_convex_polygon(Rng& rng, int min_vertices = 3, int max_vertices = 12) {
  for (;;) {
    const int k = uniform_int(rng, min_vertices, max_vertices);
    const double a = uniform(rng, 0.3, 2.0);
    const double b = uniform(rng, 0.3, 2.0);
    const double rot = uniform(rng, 0, 2 * kPi);
    const Point2 c{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    std::vector<double> t(static_cast<std::size_t>(k));
    for (auto& v : t) v = uniform(rng, 0, 2 * kPi);
    std::sort(t.begin(), t.end());
    bool spread = true;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double next = i + 1 < t.size() ? t[i + 1] : t[0] + 2 * kPi;
      if (next - t[i] < 0.05) spread = false;
    }
    if (!spread) continue;
    std::vector<Point2> pts;
    for (double s : t) pts.push_back(c + opaque::rotate({a * std::cos(s), b * std::sin(s)}, rot));
    try {
      return ConvexPolygon(pts);
    } catch (const opaque::Error&) {
    }
  }
}

inline Segment random_segment(Rng& rng, double box = 2.0) {
  for (;;) {
    const Point2 p{uniform(rng, -box, box), uniform(rng, -box, box)};
    const Point2 q{uniform(rng, -box, box), uniform(rng, -box, box)};
    if (opaque::distance(p, q) > 1e-3) return Segment(p, q);
  }
}

inline std::vector<Segment> random_barrier(Rng& rng, int max_segments = 10) {
  std::vector<Segment> out;
  const int n = uniform_int(rng, 1, max_segments);
  for (int i = 0; i < n; ++i) out.push_back(random_segment(rng));
  return out;
}

// A segment on the far side of a support line of the polygon; touching is allowed for gap = 0.
inline Segment random_outside_segment(Rng& rng, const ConvexPolygon& poly) {
  const double phi = uniform(rng, 0, 2 * kPi);
  const Point2 u = opaque::unit_direction(phi);
  const Point2 v{-u.y, u.x};
  double h = -1e300;
  for (Point2 p : poly.vertices()) h = std::max(h, opaque::dot(p, u));
  const double gap = uniform_int(rng, 0, 9) == 0 ? 0.0 : uniform(rng, 0.0, 2.0);
  for (;;) {
    const Point2 p = (h + gap + uniform(rng, 0, 1.5)) * u + uniform(rng, -3, 3) * v;
    const Point2 q = (h + gap + uniform(rng, 0, 1.5)) * u + uniform(rng, -3, 3) * v;
    if (opaque::distance(p, q) > 1e-2) return Segment(p, q);
  }
}

// Does the line {x : x . dir(angle) = offset} meet the segment?
inline bool line_meets_segment(const Segment& s, double angle, double offset) {
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  const double pa = s.a().x * ca + s.a().y * sa - offset;
  const double pb = s.b().x * ca + s.b().y * sa - offset;
  return (pa <= 0 && pb >= 0) || (pa >= 0 && pb <= 0);
}

inline bool line_meets_any(const std::vector<Segment>& barrier, double angle, double offset) {
  for (const auto& s : barrier)
    if (line_meets_segment(s, angle, offset)) return true;
  return false;
}

inline std::pair<double, double> polygon_extent(const ConvexPolygon& poly, double angle) {
  double lo = 1e300;
  double hi = -1e300;
  for (Point2 p : poly.vertices()) {
    const double t = p.x * std::cos(angle) + p.y * std::sin(angle);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

// Ray origin + t dir(direction), t >= 0, against a segment, by solving the 2x2 system.
inline bool ray_meets_segment(const Segment& s, Point2 origin, double direction) {
  const Point2 d{std::cos(direction), std::sin(direction)};
  const Point2 e = s.b() - s.a();
  const Point2 w = s.a() - origin;
  const double det = e.x * d.y - e.y * d.x;
  if (std::abs(det) < 1e-15) {
    // parallel: hit only if collinear and some endpoint lies ahead
    if (std::abs(w.x * d.y - w.y * d.x) > 1e-12) return false;
    return opaque::dot(w, d) >= 0 || opaque::dot(s.b() - origin, d) >= 0;
  }
  const double t = (e.x * w.y - e.y * w.x) / det;
  const double u = (d.x * w.y - d.y * w.x) / det;
  return t >= 0 && u >= 0 && u <= 1;
}

inline Point2 random_point_in(Rng& rng, const ConvexPolygon& poly) {
  // convex combination of the vertices, biased towards the boundary now and then
  std::vector<double> w(poly.size());
  double total = 0;
  for (auto& x : w) total += (x = std::pow(uniform(rng, 0, 1), 4.0));
  Point2 p{0, 0};
  for (std::size_t i = 0; i < w.size(); ++i) p = p + (w[i] / total) * poly.vertex(i);
  return p;
}

inline bool group_segment_ok(const Segment& s, double lambda, double kappa, double D, double W, double sign) {
  const double theta = s.angle();
  if (!(std::min(theta, kPi - theta) > lambda)) return false;
  for (Point2 p : {s.a(), s.b()}) {
    if (opaque::norm(p) > 0.5 * D) return false;
    const double u = sign * (p.x * std::sin(kappa) + p.y * std::cos(kappa));
    const double v = sign * (p.x * std::sin(kappa) - p.y * std::cos(kappa));
    if (u < 0.5 * W || v < 0.5 * W) return false;
  }
  return true;
}

// Rejection sampling of segments in the two wedges of a disk of diameter D.
inline opaque::SegmentGroupConfig random_group_config(Rng& rng) {
  for (;;) {
    opaque::SegmentGroupConfig cfg;
    cfg.n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    cfg.D = uniform(rng, 1.0, 3.0);
    cfg.lambda = uniform(rng, 0.15, 0.8);
    cfg.kappa = uniform(rng, 0.3, 0.9) * cfg.lambda;
    cfg.l = uniform(rng, 0.03, 0.25) * cfg.D;
    const double W = cfg.W();
    bool ok = true;
    for (double sign : {-1.0, 1.0}) {
      auto& family = sign < 0 ? cfg.minus : cfg.plus;
      for (std::size_t i = 0; i < cfg.n && ok; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 400 && !placed; ++attempt) {
          const Point2 c{sign * uniform(rng, 0.0, 0.5 * cfg.D), uniform(rng, -0.3, 0.3) * cfg.D};
          const double theta = uniform(rng, cfg.lambda + 1e-6, kPi - cfg.lambda - 1e-6);
          const Point2 h = 0.5 * cfg.l * opaque::unit_direction(theta);
          const Segment s(c - h, c + h);
          if (group_segment_ok(s, cfg.lambda, cfg.kappa, cfg.D, W, sign)) {
            family.push_back(s);
            placed = true;
          }
        }
        ok = placed;
      }
    }
    if (ok) return cfg;
  }
}

// Lower envelope drift + a sinusoid, slope bounded by L.
inline opaque::BandFunction random_band(Rng& rng, opaque::Interval dom, double start, double drift, double L,
                                        double width, std::size_t samples = opaque::kDefaultBandSamples) {
  const int m = uniform_int(rng, 1, 4);
  const double budget = std::max(0.0, L - std::abs(drift));
  const double amp = uniform(rng, 0, 1) * budget * dom.measure() / (2 * kPi * m);
  const double phase = uniform(rng, 0, 2 * kPi);
  const double T = dom.measure();
  auto f = [=](double a) {
    const double t = a - dom.lo;
    return start + drift * t + amp * (std::sin(2 * kPi * m * t / T + phase) - std::sin(phase));
  };
  return opaque::BandFunction::sample(dom, f, width, L, samples);
}

inline std::vector<opaque::BandFunction> random_band_family(Rng& rng, std::size_t samples = opaque::kDefaultBandSamples) {
  const int n = uniform_int(rng, 1, 5);
  const double L = uniform(rng, 0.2, 2.0);
  const opaque::Interval dom{uniform(rng, -1, 0), uniform(rng, 0.5, 3)};
  const double width = uniform(rng, 0.05, 0.6);
  std::vector<opaque::BandFunction> out;
  for (int i = 0; i < n; ++i)
    out.push_back(random_band(rng, dom, uniform(rng, -0.5, 0.5), uniform(rng, -L, L), L, width, samples));
  return out;
}

struct CrossingFamilies {
  std::vector<opaque::BandFunction> fs;
  std::vector<opaque::BandFunction> gs;
  double W = 0;
  double D = 0;
};

// fs rise through gs; each g starts W above every f and ends W below it.
inline CrossingFamilies random_crossing_families(Rng& rng) {
  CrossingFamilies c;
  const int n = uniform_int(rng, 1, 3);
  c.D = uniform(rng, 1.0, 4.0);
  c.W = uniform(rng, 0.05, 0.8);
  const double L = 0.5 * c.D;
  const double w = c.W / n;
  const double H = 0.5 * (c.W + w);
  const double spread = 0.1 * c.W;
  const double T = (2.2 * c.W + 3 * w + 0.01) / (1.2 * L) * uniform(rng, 1.0, 2.0);
  const opaque::Interval dom{0, T};
  for (int i = 0; i < n; ++i) {
    c.fs.push_back(random_band(rng, dom, -H - w - uniform(rng, 0, spread), 0.7 * L, L, w));
    c.gs.push_back(random_band(rng, dom, H + uniform(rng, 0, spread), -0.7 * L, L, w));
  }
  // the sinusoid budget is 0.3 L, which keeps the end separation; assert rather than trust it
  for (const auto& f : c.fs)
    for (const auto& g : c.gs)
      if (f.lower(T) - g.upper(T) < c.W || g.lower(0) - f.upper(0) < c.W) return random_crossing_families(rng);
  return c;
}

}  // namespace testkit
