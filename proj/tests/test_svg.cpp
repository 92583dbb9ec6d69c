#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opaque/constructions.hpp"
#include "opaque/svg.hpp"

using namespace opaque;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("one element per object and segment") {
  const Scene s = make_square_barrier(SquareBarrier::kHalfDiagonalSteiner);
  const std::string svg = render_svg(s);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<polygon class=\"object\"") == 1);
  CHECK(count(svg, "<path class=\"barrier\"") == 4);
  CHECK(count(svg, "class=\"witness\"") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(render_svg(s) == svg);
}

TEST_CASE("witness overlay") {
  const Scene s = make_square_barrier(SquareBarrier::kDiagonals);
  SvgOptions o;
  o.line_witness = LineWitness{0.3, 0.1};
  CHECK(count(render_svg(s, o), "class=\"witness\"") == 1);
  SvgOptions r;
  r.ray_witness = RayWitness{{0, 0}, 1.0};
  CHECK(count(render_svg(s, r), "class=\"witness\"") == 1);
  SvgOptions big;
  big.width_px = 1024;
  CHECK(render_svg(s, big).find("width=\"1024\"") != std::string::npos);
}

TEST_CASE("diagonals and an empty barrier") {
  const Scene d = make_square_barrier(SquareBarrier::kDiagonals);
  const std::string svg = render_svg(d);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(count(svg, "<path class=\"barrier\"") == 2);
  const Scene bare{unit_square(), {}};
  const std::string only = render_svg(bare);
  CHECK(count(only, "<polygon") == 1);
  CHECK(count(only, "<path") == 0);
}
