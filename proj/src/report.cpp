#include "opaque/report.hpp"

#include <cstdio>

namespace opaque {

using nlohmann::json;

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_with_error(double value, double error) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g ± %.2g", value, error);
  return buf;
}

json to_json(const CertifiedIntegral& v) {
  return {{"value", v.value}, {"error_bound", v.error_bound}, {"evaluations", v.evaluations}};
}

json to_json(const Verdict& v) {
  json j{{"verdict", std::string(to_string(v.kind))}, {"arcs", v.arcs}, {"detail", v.detail}};
  if (std::isfinite(v.margin)) j["margin"] = v.margin;
  if (v.line_witness) j["witness"] = {{"angle", v.line_witness->angle}, {"offset", v.line_witness->offset}};
  if (v.ray_witness) {
    j["witness"] = {{"origin", {v.ray_witness->origin.x, v.ray_witness->origin.y}},
                    {"direction", v.ray_witness->direction}};
  }
  return j;
}

json to_json(const WasteCertificate& c) {
  return {{"subset_length", c.subset_length},
          {"clipped_integral", to_json(c.clipped_integral)},
          {"delta", c.delta},
          {"bound", c.bound}};
}

json to_json(const FarOutsideCertificate& c) {
  return {{"angle_set_measure", c.angle_set_measure}, {"epsilon", c.epsilon}, {"factor", c.factor}};
}

json to_json(const GroupViolation& v) {
  return {{"clause", v.clause}, {"family", v.family}, {"index", v.index}, {"message", v.message}};
}

json to_json(const ConstantChainReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"name", row.name},
                    {"value", row.value},
                    {"inequality", row.inequality},
                    {"holds", row.holds},
                    {"slack", row.slack}});
  }
  return {{"rows", rows}, {"lower_bound", r.lower_bound}, {"reproduced", r.reproduced()}};
}

}  // namespace opaque
