#include "opaque/scene_io.hpp"

#include <json.hpp>

namespace opaque {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorCode::kSchema, msg); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, std::string("malformed JSON: ") + e.what());
  }
}

Point2 read_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    schema_error(where + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point2> read_points(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + ": expected a list of points");
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < j.size(); ++i) pts.push_back(read_point(j[i], where + "[" + std::to_string(i) + "]"));
  return pts;
}

std::vector<Segment> read_segments(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + ": expected a list of segments");
  std::vector<Segment> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) schema_error(at + ": expected [[x1, y1], [x2, y2]]");
    const Point2 a = read_point(j[i][0], at);
    const Point2 b = read_point(j[i][1], at);
    try {
      out.emplace_back(a, b);
    } catch (const Error& e) {
      throw Error(e.code(), at + ": " + e.what());
    }
  }
  return out;
}

ConvexPolygon read_polygon(const json& j, const std::string& where) {
  try {
    return ConvexPolygon(read_points(j, where));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchema) throw;
    throw Error(e.code(), where + ": " + e.what());
  }
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json segments_json(const std::vector<Segment>& segs) {
  json arr = json::array();
  for (const auto& s : segs) arr.push_back(json::array({point_json(s.a()), point_json(s.b())}));
  return arr;
}

json polygon_json(const ConvexPolygon& poly) {
  json arr = json::array();
  for (const auto& p : poly.vertices()) arr.push_back(point_json(p));
  return arr;
}

double read_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) schema_error(std::string("missing number \"") + key + "\"");
  return j[key].get<double>();
}

}  // namespace

SceneDocument parse_scene_document(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) schema_error("scene must be a JSON object");
  SceneDocument doc;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer()) schema_error("version must be an integer");
    doc.version = j["version"].get<int>();
    if (doc.version != 1) schema_error("unsupported scene version " + std::to_string(doc.version));
  }
  if (j.contains("object") && j.contains("objects")) schema_error("use either \"object\" or \"objects\"");
  if (j.contains("object")) {
    doc.objects.push_back(read_polygon(j["object"], "object"));
  } else if (j.contains("objects")) {
    doc.multi = true;
    if (!j["objects"].is_array()) schema_error("objects: expected a list of polygons");
    for (std::size_t i = 0; i < j["objects"].size(); ++i)
      doc.objects.push_back(read_polygon(j["objects"][i], "objects[" + std::to_string(i) + "]"));
  }
  if (!j.contains("barrier")) schema_error("missing \"barrier\"");
  doc.barrier = read_segments(j["barrier"], "barrier");
  for (const auto& [key, value] : j.items()) {
    if (key != "version" && key != "object" && key != "objects" && key != "barrier")
      schema_error("unknown key \"" + key + "\"");
  }
  return doc;
}

Scene parse_scene(std::string_view text) {
  SceneDocument doc = parse_scene_document(text);
  if (doc.objects.size() > 1) schema_error("line-barrier scenes take a single object");
  Scene s;
  if (!doc.objects.empty()) s.object = std::move(doc.objects.front());
  s.barrier = std::move(doc.barrier);
  return s;
}

MultiScene parse_multi_scene(std::string_view text) {
  SceneDocument doc = parse_scene_document(text);
  return {std::move(doc.objects), std::move(doc.barrier)};
}

std::string emit_scene(const SceneDocument& doc) {
  json j;
  j["version"] = doc.version;
  if (doc.multi) {
    json arr = json::array();
    for (const auto& o : doc.objects) arr.push_back(polygon_json(o));
    j["objects"] = arr;
  } else if (!doc.objects.empty()) {
    j["object"] = polygon_json(doc.objects.front());
  }
  j["barrier"] = segments_json(doc.barrier);
  return j.dump(2) + "\n";
}

std::string emit_scene(const Scene& scene) {
  SceneDocument doc;
  if (!scene.object.empty()) doc.objects.push_back(scene.object);
  doc.barrier = scene.barrier;
  return emit_scene(doc);
}

std::string emit_scene(const MultiScene& scene) {
  SceneDocument doc;
  doc.objects = scene.objects;
  doc.barrier = scene.barrier;
  doc.multi = true;
  return emit_scene(doc);
}

Polyline parse_polyline(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("curve")) schema_error("expected {\"curve\": [[x, y], ...]}");
  return Polyline(read_points(j["curve"], "curve"));
}

SegmentGroupConfig parse_group_config(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) schema_error("group configuration must be a JSON object");
  SegmentGroupConfig cfg;
  const double n = read_number(j, "n");
  if (n < 0 || n != std::floor(n)) schema_error("n must be a non-negative integer");
  cfg.n = static_cast<std::size_t>(n);
  cfg.l = read_number(j, "l");
  cfg.lambda = read_number(j, "lambda");
  cfg.kappa = read_number(j, "kappa");
  cfg.D = read_number(j, "D");
  if (!j.contains("minus") || !j.contains("plus")) schema_error("missing \"minus\" or \"plus\"");
  cfg.minus = read_segments(j["minus"], "minus");
  cfg.plus = read_segments(j["plus"], "plus");
  return cfg;
}

std::string emit_group_config(const SegmentGroupConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["l"] = cfg.l;
  j["lambda"] = cfg.lambda;
  j["kappa"] = cfg.kappa;
  j["D"] = cfg.D;
  j["minus"] = segments_json(cfg.minus);
  j["plus"] = segments_json(cfg.plus);
  return j.dump(2) + "\n";
}

}  // namespace opaque
