#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opaque/certificates.hpp"
#include "opaque/constructions.hpp"
#include "opaque/coverage.hpp"
#include "opaque/square_theorem.hpp"
#include "support.hpp"

using namespace opaque;

TEST_CASE("half-perimeter bound") {
  CHECK(jones_bound(unit_square()) == doctest::Approx(2.0));
  CHECK(jones_bound(axis_rectangle(0, 0, 3, 1)) == doctest::Approx(4.0));
}

TEST_CASE("waste arithmetic") {
  const WasteCertificate c = waste_certificate(2.0, 1.0, {3.0, 0.0, 0});
  CHECK(c.delta == doctest::Approx(0.25));
  CHECK(c.bound == doctest::Approx(2.25));
  // the error bound is charged against the waste
  const WasteCertificate d = waste_certificate(2.0, 1.0, {3.0, 0.4, 0});
  CHECK(d.delta == doctest::Approx(0.15));
}

TEST_CASE("a segment sticking outside the square wastes length") {
  const Scene s = make_square_barrier(SquareBarrier::kThreeSides);
  std::vector<Segment> subset = s.barrier;
  subset.push_back(Segment({0.5, 0.5}, {1.5, 1.5}));
  const WasteCertificate c = waste_certificate(s.object, subset);
  CHECK(c.delta > 0.2);
  // subset of a certified barrier: its length is at least the waste bound
  const WasteCertificate own = waste_certificate(s.object, s.barrier);
  CHECK(total_length(s.barrier) >= own.bound - 1e-6);
}

TEST_CASE("far-outside certificate") {
  const ConvexPolygon sq = unit_square();
  // far to the right, vertical: only near-vertical lines through it miss U
  const Segment b({3, -0.1}, {3, 0.1});
  const FarOutsideCertificate c = far_outside_certificate(b, sq);
  CHECK(c.angle_set_measure < kTwoPi);
  CHECK(c.epsilon == doctest::Approx((kTwoPi - c.angle_set_measure) / 4));
  CHECK(c.factor == doctest::Approx(4 * std::cos(c.epsilon)));
  const std::vector<Segment> one{b};
  const CertifiedIntegral i = integrate_clipped_coverage(one, sq);
  CHECK(i.value - i.error_bound <= c.factor * b.length() + 1e-9);
  CHECK_THROWS_AS(far_outside_certificate(Segment({-1, 0}, {1, 0}), sq), Error);
  // touching the boundary is allowed
  CHECK_NOTHROW(far_outside_certificate(Segment({0.5, 0.5}, {1, 1}), sq));
}

TEST_CASE("far-outside property on random instances") {
  testkit::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const ConvexPolygon p = testkit::random_convex_polygon(rng);
    const Segment b = testkit::random_outside_segment(rng, p);
    const FarOutsideCertificate c = far_outside_certificate(b, p);
    const std::vector<Segment> one{b};
    const CertifiedIntegral i = integrate_clipped_coverage(one, p);
    CHECK(i.value <= c.factor * b.length() + 1e-6);
    // brute-force angle set measure on a grid
    int hit = 0;
    const int N = 20000;
    for (int k = 0; k < N; ++k) {
      const double a = kTwoPi * (k + 0.5) / N;
      const auto [lo, hi] = testkit::polygon_extent(p, a);
      const double pa = std::cos(a) * b.a().x + std::sin(a) * b.a().y;
      const double pb = std::cos(a) * b.b().x + std::sin(a) * b.b().y;
      if (std::max(pa, pb) >= lo && std::min(pa, pb) <= hi) ++hit;
    }
    CHECK(c.angle_set_measure == doctest::Approx(kTwoPi * hit / N).epsilon(2e-3));
  }
}

TEST_CASE("segment group formula and validation") {
  CHECK(segment_group_formula(1, 1.0, kPi / 2, kPi / 3, 2.0) ==
        doctest::Approx(8.0 - 2 * std::pow(std::sin(kPi / 6), 2) / 2.0));
  CHECK(segment_group_formula(1, 1.0, kPi / 2, kPi / 4, 2.0) == doctest::Approx(7.5));
  CHECK(segment_group_formula(2, 0.3, 0.4, 0.4, 1.0) == doctest::Approx(4.8));
  const SegmentGroupConfig cfg = theorem_group_config();
  CHECK(validate_segment_group(cfg).empty());
  CHECK(segment_group_bound(cfg) == doctest::Approx(0.286799931329319295).epsilon(1e-12));

  SegmentGroupConfig bad = cfg;
  bad.plus = {Segment({0.2, 0}, {0.2 + kEta, 0})};  // horizontal
  auto v = validate_segment_group(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().clause == 1);
  CHECK(v.front().family == "plus");
  CHECK_THROWS_AS(segment_group_bound(bad), Error);

  bad = cfg;
  bad.minus = {Segment({-0.9, -0.5 * kEta}, {-0.9, 0.5 * kEta})};
  v = validate_segment_group(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().clause == 2);

  bad = cfg;
  bad.plus = {Segment({0.01, -0.5 * kEta}, {0.01, 0.5 * kEta})};
  v = validate_segment_group(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().clause == 3);

  bad = cfg;
  bad.n = 2;
  CHECK(validate_segment_group(bad).front().clause == 0);
}

TEST_CASE("segment group bound holds on random configurations") {
  testkit::Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const SegmentGroupConfig cfg = testkit::random_group_config(rng);
    REQUIRE(validate_segment_group(cfg).empty());
    std::vector<Segment> all = cfg.minus;
    all.insert(all.end(), cfg.plus.begin(), cfg.plus.end());
    const CertifiedIntegral u = integrate_union_projection(all);
    CHECK(u.value <= segment_group_bound(cfg) + 1e-6);
  }
}
