#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opaque/constructions.hpp"
#include "opaque/coverage.hpp"
#include "support.hpp"

using namespace opaque;

namespace {

Scene hull_boundary_scene(const ConvexPolygon& p) { return {p, p.edges()}; }

// Diagonals of the unit square with a hole of half-width h around the centre of one of them.
Scene diagonals_with_hole(double h) {
  Scene s;
  s.object = unit_square();
  s.barrier = {Segment({-0.5, -0.5}, {0.5, 0.5}), Segment({-0.5, 0.5}, {-h, h}), Segment({h, -h}, {0.5, -0.5})};
  return s;
}

}  // namespace

TEST_CASE("projection and gap at one angle") {
  const Scene s = make_square_barrier(SquareBarrier::kThreeSides);
  const IntervalSet b = barrier_projection(s.barrier, 0.0);
  CHECK(b.measure() == doctest::Approx(1.0));
  CHECK(coverage_gap(s.object, s.barrier, 0.3).empty());
  const std::vector<Segment> half{Segment({-0.5, -0.5}, {0, -0.5})};
  const IntervalSet gap = coverage_gap(s.object, half, 0.0);
  CHECK(gap.measure() == doctest::Approx(0.5));
}

TEST_CASE("classical square barriers are certified") {
  for (auto v : {SquareBarrier::kThreeSides, SquareBarrier::kDiagonals, SquareBarrier::kTwoSidesHalfDiagonal,
                 SquareBarrier::kHalfDiagonalSteiner}) {
    const Verdict r = verify_line_barrier(make_square_barrier(v));
    CHECK(r.kind == VerdictKind::kCertified);
    CHECK(r.margin > 1e-6);
  }
}

TEST_CASE("a gap yields a witness that re-validates") {
  const Scene s = diagonals_with_hole(0.05);
  const Verdict r = verify_line_barrier(s);
  REQUIRE(r.kind == VerdictKind::kWitness);
  REQUIRE(r.line_witness);
  CHECK(witness_is_valid(s, *r.line_witness));
  CHECK_FALSE(testkit::line_meets_any(s.barrier, r.line_witness->angle, r.line_witness->offset));
  const auto [lo, hi] = testkit::polygon_extent(s.object, r.line_witness->angle);
  CHECK(r.line_witness->offset > lo);
  CHECK(r.line_witness->offset < hi);
  CHECK(r.margin < 0);
}

TEST_CASE("removing any segment of a hull boundary breaks it") {
  testkit::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvexPolygon p = testkit::random_convex_polygon(rng, 4, 9);
    Scene s = hull_boundary_scene(p);
    CHECK(verify_line_barrier(s).kind == VerdictKind::kCertified);
    // a line through the dropped edge still leaves through another one
    s.barrier.erase(s.barrier.begin() + testkit::uniform_int(rng, 0, static_cast<int>(s.barrier.size()) - 1));
    CHECK(verify_line_barrier(s).kind == VerdictKind::kCertified);
    // two adjacent edges gone: lines cutting off their common vertex get through
    s = hull_boundary_scene(p);
    s.barrier.erase(s.barrier.begin(), s.barrier.begin() + 2);
    const Verdict r = verify_line_barrier(s);
    REQUIRE(r.kind == VerdictKind::kWitness);
    CHECK(witness_is_valid(s, *r.line_witness));
  }
}

TEST_CASE("random scenes: verdicts agree with line sampling") {
  testkit::Rng rng(23);
  int witnesses = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Scene s{testkit::random_convex_polygon(rng, 3, 6), testkit::random_barrier(rng, 8)};
    const Verdict r = verify_line_barrier(s);
    if (r.kind == VerdictKind::kWitness) {
      ++witnesses;
      CHECK(witness_is_valid(s, *r.line_witness));
    } else if (r.kind == VerdictKind::kCertified) {
      for (int k = 0; k < 2000; ++k) {
        const double a = testkit::uniform(rng, 0, kPi);
        const auto [lo, hi] = testkit::polygon_extent(s.object, a);
        CHECK(testkit::line_meets_any(s.barrier, a, testkit::uniform(rng, lo, hi)));
      }
    }
  }
  CHECK(witnesses > 0);
}

TEST_CASE("precondition and argument errors") {
  Scene empty;
  empty.barrier = {Segment({0, 0}, {1, 0})};
  CHECK_THROWS_AS(verify_line_barrier(empty), Error);
  CHECK_THROWS_AS(verify_line_barrier(make_square_barrier(SquareBarrier::kDiagonals), 0.0), Error);
  // an empty barrier cannot block anything
  Scene bare{unit_square(), {}};
  CHECK(verify_line_barrier(bare).kind == VerdictKind::kWitness);
}

TEST_CASE("integrals") {
  const Scene s = make_square_barrier(SquareBarrier::kHalfDiagonalSteiner);
  const CertifiedIntegral p = integrate_projection_length(s.barrier);
  CHECK(p.value == 4 * total_length(s.barrier));
  CHECK(p.error_bound == 0);
  const CertifiedIntegral w = integrate_width(s.object);
  CHECK(std::abs(w.value - 8.0) <= w.error_bound + 1e-12);
  // a certified barrier covers U(alpha) at every angle
  const CertifiedIntegral c = integrate_clipped_coverage(s.barrier, s.object);
  CHECK(std::abs(c.value - 8.0) <= c.error_bound + 1e-12);
  // one segment alone: |b(alpha)| integrates to 4|b|
  const std::vector<Segment> one{Segment({0, 0}, {2, 1})};
  const CertifiedIntegral u = integrate_union_projection(one);
  CHECK(std::abs(u.value - 4 * one[0].length()) <= u.error_bound + 1e-12);
}

TEST_CASE("width integrals of simple shapes") {
  const CertifiedIntegral t = integrate_width(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(std::abs(t.value - 2 * (2 + std::sqrt(2.0))) <= 1e-6);
  const CertifiedIntegral r = integrate_width(axis_rectangle(0, 0, 1, 0.01));
  CHECK(std::abs(r.value - 4.04) <= 1e-6);
}

TEST_CASE("clipped coverage examples") {
  const ConvexPolygon sq = unit_square();
  const std::vector<Segment> inside{Segment({-0.3, -0.2}, {0.4, 0.1})};
  const CertifiedIntegral c = integrate_clipped_coverage(inside, sq);
  CHECK(std::abs(c.value - 4 * inside[0].length()) <= 1e-7);
  CHECK(integrate_clipped_coverage(std::vector<Segment>{}, sq).value == 0.0);
  // a segment outside the octagon built on the square sides
  const double apex = 162.0 / 295.0;
  const std::vector<Segment> out{Segment({apex + 0.01, -0.3}, {apex + 0.2, 0.4})};
  const CertifiedIntegral o = integrate_clipped_coverage(out, sq);
  CHECK(o.value <= 4 * out[0].length() * std::cos(0.5 * std::atan(29.0 / 295.0)) + 1e-9);
}

TEST_CASE("single-segment projections integrate to 4 regardless of direction") {
  testkit::Rng rng(25);
  for (int k = 0; k < 20; ++k) {
    const double theta = testkit::uniform(rng, 0, kTwoPi);
    // |b(alpha)| = |cos(alpha - theta)| for a unit segment at angle theta
    const std::vector<Segment> b{Segment({0, 0}, unit_direction(theta))};
    const CertifiedIntegral u = integrate_union_projection(b);
    CHECK(std::abs(u.value - 4.0) <= 1e-9);
  }
}

TEST_CASE("certified scenes satisfy the projection-length chain") {
  testkit::Rng rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    Scene s{testkit::random_convex_polygon(rng, 3, 6), {}};
    s.barrier = s.object.edges();
    s.barrier.pop_back();
    for (int k = 0; k < 2; ++k) s.barrier.push_back(testkit::random_segment(rng));
    if (verify_line_barrier(s).kind != VerdictKind::kCertified) continue;
    CHECK(integrate_width(s.object).value <= integrate_projection_length(s.barrier).value + 1e-6);
  }
}

TEST_CASE("more barrier never means a larger gap") {
  testkit::Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const ConvexPolygon p = testkit::random_convex_polygon(rng);
    auto b = testkit::random_barrier(rng, 5);
    const double a = testkit::uniform(rng, 0, kPi);
    const IntervalSet before = coverage_gap(p, b, a);
    b.push_back(testkit::random_segment(rng));
    CHECK(before.includes(coverage_gap(p, b, a)));
  }
}
