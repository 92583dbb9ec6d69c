#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opaque/constructions.hpp"
#include "opaque/coverage.hpp"
#include "support.hpp"

using namespace opaque;

TEST_CASE("square barrier lengths") {
  const double expected[] = {3.0, 2.82842712474619009760, 2.70710678118654752440, 2.63895843376468409790};
  const SquareBarrier all[] = {SquareBarrier::kThreeSides, SquareBarrier::kDiagonals,
                               SquareBarrier::kTwoSidesHalfDiagonal, SquareBarrier::kHalfDiagonalSteiner};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(make_square_barrier(all[i]).barrier_length() - expected[i]) < 1e-12);
    CHECK(std::abs(square_barrier_length(all[i]) - expected[i]) < 1e-12);
    CHECK(parse_square_barrier(to_string(all[i])) == all[i]);
  }
  CHECK_FALSE(parse_square_barrier("pentagram"));
}

TEST_CASE("Fermat point") {
  // equilateral: the centroid
  const Point2 f = fermat_point({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  CHECK(f.x == doctest::Approx(0.5));
  CHECK(f.y == doctest::Approx(std::sqrt(3.0) / 6));
  // obtuse apex of 150 degrees: the apex itself
  const Point2 g = fermat_point({-1, 0}, {1, 0}, {0, std::tan(kPi / 12)});
  CHECK(g.y == doctest::Approx(std::tan(kPi / 12)));
  CHECK_THROWS_AS(fermat_point({0, 0}, {1, 1}, {2, 2}), Error);
  // first-order optimality on random triangles: unit vectors to the terminals cancel
  testkit::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    Point2 t[3];
    for (auto& p : t) p = {testkit::uniform(rng, -1, 1), testkit::uniform(rng, -1, 1)};
    if (std::abs(cross(t[1] - t[0], t[2] - t[0])) < 1e-3) continue;
    const Point2 p = fermat_point(t[0], t[1], t[2]);
    const double total = distance(p, t[0]) + distance(p, t[1]) + distance(p, t[2]);
    for (int k = 0; k < 8; ++k) {
      const Point2 q = p + 1e-4 * unit_direction(k * kPi / 4);
      CHECK(distance(q, t[0]) + distance(q, t[1]) + distance(q, t[2]) >= total - 1e-12);
    }
  }
}

TEST_CASE("Steiner tree meets at 120 degrees") {
  const Scene s = make_square_barrier(SquareBarrier::kHalfDiagonalSteiner);
  const Point2 f = fermat_point({-0.5, -0.5}, {0.5, -0.5}, {-0.5, 0.5});
  const Point2 u = Point2{-0.5, -0.5} - f;
  const Point2 v = Point2{0.5, -0.5} - f;
  CHECK(std::acos(dot(u, v) / (norm(u) * norm(v))) == doctest::Approx(2 * kPi / 3));
  CHECK(s.barrier.size() == 4);
}

TEST_CASE("polyline") {
  const Polyline p({{0, 0}, {1, 0}, {1, 1}});
  CHECK(p.length() == doctest::Approx(2.0));
  CHECK(p.at_length(1.5).y == doctest::Approx(0.5));
  CHECK(p.segments().size() == 2);
  CHECK_THROWS_AS(Polyline({{0, 0}}), Error);
  CHECK_THROWS_AS(Polyline({{0, 0}, {0, 0}, {1, 0}}), Error);
}

TEST_CASE("straightening keeps length and blocks every line through the curve") {
  testkit::Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point2> v;
    Point2 p{0, 0};
    for (int i = 0; i < testkit::uniform_int(rng, 3, 8); ++i) {
      v.push_back(p);
      p = p + testkit::uniform(rng, 0.1, 1.0) * unit_direction(testkit::uniform(rng, 0, kTwoPi));
    }
    const Polyline curve(v);
    for (double eps : {0.1, 0.01}) {
      const auto out = straighten(curve, eps);
      CHECK(total_length(out) <= (1 + eps) * curve.length() + 1e-9);
      for (int k = 0; k < 2000; ++k) {
        const Point2 q = curve.at_length(testkit::uniform(rng, 0, curve.length()));
        const double a = testkit::uniform(rng, 0, kPi);
        CHECK(testkit::line_meets_any(out, a, q.x * std::cos(a) + q.y * std::sin(a)));
      }
    }
  }
  CHECK_THROWS_AS(straighten(Polyline({{0, 0}, {1, 0}, {1, 1}}), 0.0), Error);
  // a straight curve comes back as its span
  const auto line = straighten(Polyline({{0, 0}, {1, 0}, {3, 0}}), 0.1);
  REQUIRE(line.size() == 1);
  CHECK(line[0].length() == doctest::Approx(3.0));
}
