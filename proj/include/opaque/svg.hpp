#pragma once

#include <optional>
#include <string>

#include "opaque/coverage.hpp"
#include "opaque/halfline.hpp"

namespace opaque {

struct SvgOptions {
  int width_px = 512;
  std::optional<LineWitness> line_witness;
  std::optional<RayWitness> ray_witness;
};

// Objects filled, barrier segments as thick paths, witness as a dashed line.
// Output depends only on the arguments.
std::string render_svg(const MultiScene& scene, const SvgOptions& options = {});
std::string render_svg(const Scene& scene, const SvgOptions& options = {});

}  // namespace opaque
