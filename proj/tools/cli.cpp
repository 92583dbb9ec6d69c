#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "opaque/bands.hpp"
#include "opaque/certificates.hpp"
#include "opaque/constructions.hpp"
#include "opaque/coverage.hpp"
#include "opaque/halfline.hpp"
#include "opaque/report.hpp"
#include "opaque/scene_io.hpp"
#include "opaque/square_theorem.hpp"
#include "opaque/svg.hpp"

namespace opaque::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  std::string variant;
  double tol = kDefaultTolerance;
  double angle = 0.0;
  double epsilon = 0.01;
  double thickness = 0.001;
  std::size_t segment = 0;
  std::vector<std::size_t> subset;
  bool witness = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  const Options& opt;

  std::string read_input() const {
    if (opt.input.empty() || opt.input == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw IoError("cannot read " + opt.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  // Documents go to --output when given, otherwise to standard output.
  void write_document(const std::string& text) const {
    if (opt.output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f || !(f << text)) throw IoError("cannot write " + opt.output);
  }

  bool json_format() const { return opt.format == "json"; }
};

std::string interval_text(Interval iv) { return "[" + format_number(iv.lo) + ", " + format_number(iv.hi) + "]"; }

std::string interval_set_text(const IntervalSet& s) {
  if (s.empty()) return "empty";
  std::string t;
  for (const auto& iv : s.parts()) t += (t.empty() ? "" : " ") + interval_text(iv);
  return t;
}

int verdict_exit(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kCertified: return kCertified;
    case VerdictKind::kWitness: return kWitness;
    case VerdictKind::kUnresolved: return kUnresolved;
  }
  return kUnresolved;
}

void print_verdict(const Io& io, const Verdict& v, double length) {
  if (io.json_format()) {
    json j = to_json(v);
    j["barrier_length"] = length;
    io.out << j.dump(2) << "\n";
    return;
  }
  io.out << "verdict: " << to_string(v.kind) << "\n";
  if (std::isfinite(v.margin)) io.out << "margin: " << format_number(v.margin) << "\n";
  io.out << "arcs: " << v.arcs << "\n";
  io.out << "barrier length: " << format_number(length) << "\n";
  if (v.line_witness)
    io.out << "witness: angle " << format_number(v.line_witness->angle) << " offset "
           << format_number(v.line_witness->offset) << "\n";
  if (v.ray_witness)
    io.out << "witness: origin (" << format_number(v.ray_witness->origin.x) << ", "
           << format_number(v.ray_witness->origin.y) << ") direction " << format_number(v.ray_witness->direction)
           << "\n";
  io.out << "detail: " << v.detail << "\n";
}

int cmd_verify(const Io& io) {
  const Scene scene = parse_scene(io.read_input());
  const Verdict v = verify_line_barrier(scene, io.opt.tol);
  print_verdict(io, v, scene.barrier_length());
  return verdict_exit(v.kind);
}

int cmd_verify_rays(const Io& io) {
  const MultiScene scene = parse_multi_scene(io.read_input());
  const Verdict v = verify_ray_barrier(scene, io.opt.tol);
  print_verdict(io, v, scene.barrier_length());
  return verdict_exit(v.kind);
}

int cmd_length(const Io& io) {
  const MultiScene scene = parse_multi_scene(io.read_input());
  json j{{"barrier_length", scene.barrier_length()}, {"segments", scene.barrier.size()}};
  if (scene.objects.size() == 1) {
    j["jones_bound"] = jones_bound(scene.objects.front());
    j["halfline_bound"] = halfline_jones_bound(scene.objects.front());
  }
  if (io.json_format()) {
    io.out << j.dump(2) << "\n";
    return 0;
  }
  io.out << "barrier length: " << format_number(scene.barrier_length()) << "\n";
  io.out << "segments: " << scene.barrier.size() << "\n";
  if (scene.objects.size() == 1) {
    io.out << "line lower bound (half perimeter): " << format_number(jones_bound(scene.objects.front())) << "\n";
    io.out << "half-line lower bound (perimeter): " << format_number(halfline_jones_bound(scene.objects.front()))
           << "\n";
  }
  return 0;
}

int cmd_project(const Io& io) {
  const Scene scene = parse_scene(io.read_input());
  const double a = io.opt.angle;
  const IntervalSet b = barrier_projection(scene.barrier, a);
  if (io.json_format()) {
    json j{{"angle", a}};
    auto set_json = [](const IntervalSet& s) {
      json arr = json::array();
      for (const auto& iv : s.parts()) arr.push_back({iv.lo, iv.hi});
      return arr;
    };
    j["barrier"] = set_json(b);
    if (!scene.object.empty()) {
      const Interval u = project_polygon(scene.object, a);
      const IntervalSet gap = coverage_gap(scene.object, scene.barrier, a);
      j["object"] = {u.lo, u.hi};
      j["gap"] = set_json(gap);
      j["gap_measure"] = gap.measure();
    }
    io.out << j.dump(2) << "\n";
    return 0;
  }
  io.out << "angle: " << format_number(a) << "\n";
  if (!scene.object.empty()) io.out << "object projection: " << interval_text(project_polygon(scene.object, a)) << "\n";
  io.out << "barrier projection: " << interval_set_text(b) << "\n";
  if (!scene.object.empty()) {
    const IntervalSet gap = coverage_gap(scene.object, scene.barrier, a);
    io.out << "gap: " << interval_set_text(gap) << "\n";
    io.out << "gap measure: " << format_number(gap.measure()) << "\n";
  }
  return 0;
}

int cmd_integrate(const Io& io) {
  const Scene scene = parse_scene(io.read_input());
  const double tol = std::min(io.opt.tol, 1e-9);
  const CertifiedIntegral proj = integrate_projection_length(scene.barrier);
  const CertifiedIntegral uni = integrate_union_projection(scene.barrier, tol);
  json j{{"projection_length", to_json(proj)}, {"union_projection", to_json(uni)}};
  std::vector<std::pair<std::string, CertifiedIntegral>> lines{{"projection-length integral (4|B|)", proj},
                                                               {"union projection integral", uni}};
  if (!scene.object.empty()) {
    const CertifiedIntegral width = integrate_width(scene.object, tol);
    const CertifiedIntegral clipped = integrate_clipped_coverage(scene.barrier, scene.object, tol);
    j["width"] = to_json(width);
    j["clipped_coverage"] = to_json(clipped);
    j["twice_perimeter"] = 2.0 * scene.object.perimeter();
    lines.insert(lines.begin(), {"width integral", width});
    lines.push_back({"clipped coverage integral", clipped});
  }
  if (io.json_format()) {
    io.out << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& [name, v] : lines) io.out << name << ": " << format_with_error(v.value, v.error_bound) << "\n";
  if (!scene.object.empty()) io.out << "twice perimeter: " << format_number(2.0 * scene.object.perimeter()) << "\n";
  return 0;
}

std::vector<Segment> pick_subset(const std::vector<Segment>& barrier, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return barrier;
  std::vector<Segment> out;
  for (std::size_t i : idx) {
    if (i >= barrier.size()) throw Error(ErrorCode::kInvalidArgument, "subset index out of range");
    out.push_back(barrier[i]);
  }
  return out;
}

int cmd_certify_waste(const Io& io) {
  const Scene scene = parse_scene(io.read_input());
  if (scene.object.empty()) throw Error(ErrorCode::kPrecondition, "waste certificate needs an object");
  const auto subset = pick_subset(scene.barrier, io.opt.subset);
  const WasteCertificate c = waste_certificate(scene.object, subset, std::min(io.opt.tol, 1e-9));
  if (io.json_format()) {
    io.out << to_json(c).dump(2) << "\n";
    return 0;
  }
  io.out << "subset length: " << format_number(c.subset_length) << "\n";
  io.out << "clipped integral: " << format_with_error(c.clipped_integral.value, c.clipped_integral.error_bound)
         << "\n";
  io.out << "delta: " << format_number(c.delta) << "\n";
  io.out << "half perimeter: " << format_number(jones_bound(scene.object)) << "\n";
  io.out << "bound: " << format_number(c.bound) << "\n";
  return 0;
}

int cmd_certify_far_outside(const Io& io) {
  const Scene scene = parse_scene(io.read_input());
  if (scene.object.empty()) throw Error(ErrorCode::kPrecondition, "far-outside certificate needs an object");
  if (io.opt.segment >= scene.barrier.size()) throw Error(ErrorCode::kInvalidArgument, "segment index out of range");
  const Segment& b = scene.barrier[io.opt.segment];
  const FarOutsideCertificate c = far_outside_certificate(b, scene.object);
  const std::vector<Segment> one{b};
  const CertifiedIntegral clipped = integrate_clipped_coverage(one, scene.object, 1e-9);
  const bool holds = clipped.value - clipped.error_bound <= c.factor * b.length() + 1e-9;
  if (io.json_format()) {
    json j = to_json(c);
    j["segment_length"] = b.length();
    j["clipped_integral"] = to_json(clipped);
    j["holds"] = holds;
    io.out << j.dump(2) << "\n";
    return 0;
  }
  io.out << "segment length: " << format_number(b.length()) << "\n";
  io.out << "angle set measure: " << format_number(c.angle_set_measure) << "\n";
  io.out << "epsilon: " << format_number(c.epsilon) << "\n";
  io.out << "factor 4 cos(epsilon): " << format_number(c.factor) << "\n";
  io.out << "clipped integral: " << format_with_error(clipped.value, clipped.error_bound) << "\n";
  io.out << "integral <= factor * |b|: " << (holds ? "holds" : "fails") << "\n";
  return 0;
}

int cmd_certify_groups(const Io& io) {
  const SegmentGroupConfig cfg =
      io.opt.input.empty() ? theorem_group_config() : parse_group_config(io.read_input());
  const auto violations = validate_segment_group(cfg);
  json j{{"n", cfg.n}, {"l", cfg.l}, {"lambda", cfg.lambda}, {"kappa", cfg.kappa}, {"D", cfg.D}, {"W", cfg.W()}};
  json vj = json::array();
  for (const auto& v : violations) vj.push_back(to_json(v));
  j["violations"] = vj;
  std::optional<CertifiedIntegral> measured;
  double bound = 0.0;
  if (violations.empty()) {
    bound = segment_group_bound(cfg);
    std::vector<Segment> all = cfg.minus;
    all.insert(all.end(), cfg.plus.begin(), cfg.plus.end());
    measured = integrate_union_projection(all, 1e-9);
    j["bound"] = bound;
    j["measured_union"] = to_json(*measured);
    j["holds"] = measured->value - measured->error_bound <= bound;
  }
  if (io.json_format()) {
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "n: " << cfg.n << "\nl: " << format_number(cfg.l) << "\nlambda: " << format_number(cfg.lambda)
           << "\nkappa: " << format_number(cfg.kappa) << "\nD: " << format_number(cfg.D)
           << "\nW: " << format_number(cfg.W()) << "\n";
    if (violations.empty()) {
      io.out << "violations: none\n";
      io.out << "bound 8nl - 2W^2/D: " << format_number(bound) << "\n";
      io.out << "measured union integral: " << format_with_error(measured->value, measured->error_bound) << "\n";
      io.out << "measured <= bound: " << (measured->value - measured->error_bound <= bound ? "holds" : "fails")
             << "\n";
    } else {
      for (const auto& v : violations)
        io.out << "violation: clause " << v.clause << " " << v.family << "[" << v.index << "] " << v.message << "\n";
    }
  }
  return violations.empty() ? 0 : kPrecondition;
}

int cmd_reproduce(const Io& io) {
  const ConstantChainReport r = reproduce_theorem_constants();
  if (io.json_format()) {
    io.out << to_json(r).dump(2) << "\n";
  } else {
    int k = 1;
    for (const auto& row : r.rows) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%d. %-20s %.12g  %s  %s  slack %.3g\n", k++, row.name.c_str(), row.value,
                    row.inequality.c_str(), row.holds ? "holds" : "FAILS", row.slack);
      io.out << buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "lower bound %.5f\n", r.lower_bound);
    io.out << buf;
  }
  return r.reproduced() ? 0 : kUnresolved;
}

int cmd_construct(const Io& io) {
  const auto variant = parse_square_barrier(io.opt.variant);
  if (!variant) throw Error(ErrorCode::kInvalidArgument, "unknown variant " + io.opt.variant);
  io.write_document(emit_scene(make_square_barrier(*variant)));
  return 0;
}

int cmd_figure9(const Io& io) {
  const Figure9 f = figure9_scene(io.opt.thickness);
  const char* names[] = {"separate boundaries", "full convex hull", "mixed barrier"};
  json arr = json::array();
  std::ostringstream text;
  int code = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Verdict v = verify_ray_barrier(f.scenes[i], io.opt.tol);
    if (v.kind != VerdictKind::kCertified) code = verdict_exit(v.kind);
    arr.push_back({{"name", names[i]},
                   {"ideal_length", f.ideal_lengths[i]},
                   {"length", f.lengths[i]},
                   {"verdict", std::string(to_string(v.kind))}});
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-20s %.7f  (at thickness: %.7f)  ray barrier: %s\n", names[i],
                  f.ideal_lengths[i], f.lengths[i], std::string(to_string(v.kind)).c_str());
    text << buf;
  }
  const bool hull_long = f.ideal_lengths[1] > 64.24;
  const bool mixed_short = f.ideal_lengths[2] < 63.79;
  if (io.json_format()) {
    io.out << json{{"thickness", io.opt.thickness}, {"scenes", arr}, {"hull_exceeds_64_24", hull_long},
                   {"mixed_below_63_79", mixed_short}}
                  .dump(2)
           << "\n";
  } else {
    io.out << text.str();
    io.out << "full hull > 64.24: " << (hull_long ? "holds" : "fails") << "\n";
    io.out << "mixed < 63.79: " << (mixed_short ? "holds" : "fails") << "\n";
  }
  if (!hull_long || !mixed_short) code = kUnresolved;
  return code;
}

int cmd_straighten(const Io& io) {
  const Polyline curve = parse_polyline(io.read_input());
  const auto segs = straighten(curve, io.opt.epsilon);
  Scene s;
  try {
    s.object = convex_hull(curve.vertices());
  } catch (const Error&) {
  }
  s.barrier = segs;
  io.write_document(emit_scene(s));
  if (!io.opt.output.empty()) {
    io.out << "input length: " << format_number(curve.length()) << "\n";
    io.out << "output length: " << format_number(total_length(segs)) << "\n";
    io.out << "segments: " << segs.size() << "\n";
  }
  return 0;
}

int cmd_render(const Io& io) {
  const SceneDocument doc = parse_scene_document(io.read_input());
  const MultiScene scene{doc.objects, doc.barrier};
  SvgOptions options;
  if (io.opt.witness && !scene.objects.empty()) {
    if (doc.multi) {
      options.ray_witness = verify_ray_barrier(scene, io.opt.tol).ray_witness;
    } else {
      options.line_witness = verify_line_barrier({scene.objects.front(), scene.barrier}, io.opt.tol).line_witness;
    }
  }
  io.write_document(render_svg(scene, options));
  return 0;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return kSyntax;
    case ErrorCode::kSchema: return kSchema;
    case ErrorCode::kNonConvex: return kNonConvex;
    case ErrorCode::kZeroLengthSegment: return kZeroLength;
    case ErrorCode::kDegenerateHull: return kDegenerate;
    case ErrorCode::kPrecondition: return kPrecondition;
    case ErrorCode::kInvalidArgument: return kInvalidArgument;
  }
  return kInvalidArgument;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Opaque-set barrier verification and certificates", "opaque"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  using Handler = int (*)(const Io&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* desc, Handler h) {
    CLI::App* sub = app.add_subcommand(name, desc);
    commands.emplace_back(sub, h);
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Scene file (default: standard input)");
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  auto with_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "Verification tolerance")->check(CLI::PositiveNumber);
    return sub;
  };

  with_tol(with_input(add("verify", "Decide whether the barrier blocks every line meeting the object", cmd_verify)));
  with_tol(with_input(add("verify-rays", "Decide whether the barrier blocks every half-line from the objects",
                          cmd_verify_rays)));
  with_input(add("length", "Barrier length and the perimeter lower bounds", cmd_length));
  with_input(add("project", "Projections and coverage gap at one angle", cmd_project))
      ->add_option("--angle", opt.angle, "Projection angle in radians")
      ->required();
  with_tol(with_input(add("integrate", "Certified angular integrals of the scene", cmd_integrate)));
  auto* waste = with_tol(with_input(add("certify-waste", "Waste certificate for a barrier subset", cmd_certify_waste)));
  waste->add_option("--subset", opt.subset, "Barrier segment indices forming the subset (default: all)")
      ->delimiter(',');
  with_input(add("certify-far-outside", "Far-outside certificate for one segment", cmd_certify_far_outside))
      ->add_option("--segment", opt.segment, "Index of the barrier segment");
  auto* groups = add("certify-groups", "Check a segment-group configuration and its bound", cmd_certify_groups);
  groups->add_option("input", opt.input, "Group configuration file (default: the built-in theorem instance)");
  groups->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  add("reproduce-square-theorem", "Evaluate the constant chain of the unit-square bound", cmd_reproduce)
      ->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* construct = add("construct", "Emit one of the classical unit-square barriers", cmd_construct);
  construct->add_option("--variant", opt.variant, "three-sides | diagonals | two-sides-half-diagonal | steiner")
      ->required()
      ->check(CLI::IsMember({"three-sides", "diagonals", "two-sides-half-diagonal", "steiner"}));
  construct->add_option("--output", opt.output, "Write the scene here instead of standard output");
  auto* fig = with_tol(add("figure9", "Half-line barriers of two thin rectangles", cmd_figure9));
  fig->add_option("--thickness", opt.thickness, "Half thickness of the rectangles")->check(CLI::Range(1e-12, 0.01));
  fig->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  auto* str = add("straighten", "Replace a curve by a nearby segment barrier", cmd_straighten);
  str->add_option("input", opt.input, "Curve file {\"curve\": [[x, y], ...]} (default: standard input)");
  str->add_option("--epsilon", opt.epsilon, "Allowed relative length increase")->check(CLI::PositiveNumber);
  str->add_option("--output", opt.output, "Write the scene here instead of standard output");
  auto* render = with_tol(add("render", "Render a scene as SVG", cmd_render));
  render->add_option("input", opt.input, "Scene file (default: standard input)");
  render->add_option("--output", opt.output, "Write the SVG here instead of standard output");
  render->add_flag("--witness", opt.witness, "Overlay a counterexample when the barrier fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  const Io io{in, out, opt};
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(io);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const IoError& e) {
    err << "error (io): " << e.what() << "\n";
    return kIo;
  }
  err << app.help();
  return kUsage;
}

}  // namespace opaque::cli
