#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opaque/quadrature.hpp"
#include "support.hpp"

using namespace opaque;

TEST_CASE("smooth integrand with a fourth-derivative bound") {
  const std::vector<double> cuts{0, kPi};
  const auto r = integrate_piecewise([](double x) { return std::sin(x); }, cuts, {1.0, 1.0}, 1e-10);
  CHECK(std::abs(r.value - 2.0) <= r.error_bound);
  CHECK(r.error_bound <= 2e-10);
}

TEST_CASE("piecewise integrand with kinks at the cuts") {
  const std::vector<double> cuts{-1, 0, 2};
  const auto r = integrate_piecewise([](double x) { return std::abs(x); }, cuts, {0.0, 1.0}, 1e-9);
  CHECK(std::abs(r.value - 2.5) <= r.error_bound + 1e-15);
}

TEST_CASE("Lipschitz fallback bound is honest") {
  const std::vector<double> cuts{0, 1};
  Smoothness s;
  s.lipschitz = 3.0;
  const auto r = integrate_piecewise([](double x) { return std::abs(std::sin(3 * x) - 0.5); }, cuts, s, 1e-5);
  // exact value by a very fine midpoint sum
  double ref = 0;
  const int N = 2000000;
  for (int k = 0; k < N; ++k) ref += std::abs(std::sin(3 * (k + 0.5) / N) - 0.5);
  ref /= N;
  CHECK(std::abs(r.value - ref) <= r.error_bound + 1e-10);
  CHECK(r.error_bound <= 2e-5);
}

TEST_CASE("random smooth integrands") {
  testkit::Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = testkit::uniform(rng, 0.1, 3);
    const double b = testkit::uniform(rng, 0, 2);
    const std::vector<double> cuts{0, b, b + 1.3};
    auto f = [a](double x) { return std::cos(a * x); };
    const double exact = std::sin(a * (b + 1.3)) / a;
    const auto r = integrate_piecewise(f, cuts, {a * a * a * a, a}, 1e-9);
    CHECK(std::abs(r.value - exact) <= r.error_bound);
  }
}
