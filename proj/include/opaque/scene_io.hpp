#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opaque/certificates.hpp"
#include "opaque/constructions.hpp"
#include "opaque/geometry.hpp"
#include "opaque/halfline.hpp"

namespace opaque {

// {"version": 1,
//  "object": [[x, y], ...]            one convex polygon, or
//  "objects": [[[x, y], ...], ...]    several (half-line scenes),
//  "barrier": [[[x1, y1], [x2, y2]], ...]}
struct SceneDocument {
  int version = 1;
  std::vector<ConvexPolygon> objects;
  std::vector<Segment> barrier;
  // written with "objects" rather than "object"
  bool multi = false;
};

// Errors: kSyntax for malformed JSON, kSchema for wrong structure, and the
// geometry codes (kNonConvex, kZeroLengthSegment, kDegenerateHull) from validation.
SceneDocument parse_scene_document(std::string_view text);
// Exactly one object (or none) required.
Scene parse_scene(std::string_view text);
MultiScene parse_multi_scene(std::string_view text);

std::string emit_scene(const SceneDocument& doc);
std::string emit_scene(const Scene& scene);
std::string emit_scene(const MultiScene& scene);

// {"curve": [[x, y], ...]}
Polyline parse_polyline(std::string_view text);

// {"n": 1, "l": 0.1, "lambda": 0.39, "kappa": 0.18, "D": 1.41,
//  "minus": [[[x1, y1], [x2, y2]], ...], "plus": [...]}
SegmentGroupConfig parse_group_config(std::string_view text);
std::string emit_group_config(const SegmentGroupConfig& cfg);

}  // namespace opaque
