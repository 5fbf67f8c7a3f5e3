// Command-line front end: load a matrix triple (bundled fixture id or JSON
// file), run the boundary pipelines, and emit reports, meshes, and the
// example-verification suite.
//
// Exit codes: 0 success, 1 malformed input or usage error, 2 flat-face counts
// match no admissible configuration, 3 degenerate range (dim W < 3).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jnr/corners.hpp"
#include "jnr/detect.hpp"
#include "jnr/fixtures.hpp"
#include "jnr/geometry.hpp"
#include "jnr/io.hpp"
#include "jnr/separable.hpp"
#include "jnr/verify.hpp"

namespace {

struct InputSpec {
  std::string source;  // fixture id or path
  jnr::TripleFile file;
};

InputSpec load_input(const std::string& arg, const jnr::Settings& cfg) {
  for (const std::string& id : jnr::fixtures::ids())
    if (id == arg) return {arg, jnr::fixtures::load(arg).file};
  std::ifstream in(arg);
  if (!in) throw jnr::ParseError("cannot open input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {arg, jnr::parse_triple_text(buf.str(), cfg)};
}

// One knob scales the certification gates together: the pencil acceptance
// tolerance, and the minor/corner/ellipse-fit gates two decades above it.
jnr::Settings make_settings(double tol) {
  jnr::Settings cfg;
  if (tol > 0.0) {
    cfg.tuple_accept_tol = tol;
    cfg.minor_tol = tol * 1e2;
    cfg.corner_support_tol = tol * 1e2;
    cfg.ellipse_fit_tol = tol * 1e2;
  }
  return cfg;
}

std::string out_stem(const std::string& out) {
  if (out.size() > 4 && out.substr(out.size() - 4) == ".obj") return out.substr(0, out.size() - 4);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

int run_classify(const std::string& input, uint64_t seed, double tol, bool as_json,
                 const std::string& out) {
  jnr::Settings cfg = make_settings(tol);
  InputSpec in = load_input(input, cfg);
  const jnr::MatrixTriple& t = in.file.triple;
  std::vector<jnr::Event> events;

  jnr::ClassSignature sig = jnr::classify_jnr(t, cfg, seed, &events);
  std::vector<jnr::RankOneTuple> tuples;
  for (const jnr::FaceRecord& f : sig.faces) tuples.push_back(f.tuple);
  for (const jnr::FaceRecord& f : sig.other_flat) tuples.push_back(f.tuple);
  std::vector<jnr::EllipticFace> census = jnr::elliptic_census(t, tuples, cfg, seed, &events);
  std::vector<jnr::JointSpectrumPoint> spectrum = jnr::joint_spectrum(t, cfg);

  jnr::ojson corners = jnr::ojson::array();
  int corner_count = 0;
  for (const jnr::JointSpectrumPoint& jp : spectrum) {
    jnr::CornerVerdict v = jnr::is_corner_point(t, jp.value, cfg, seed);
    if (v.is_corner) ++corner_count;
    corners.push_back({{"point", jnr::vec3_to_json(jp.value)},
                       {"is_corner", v.is_corner},
                       {"cone_rank", v.cone_rank},
                       {"hits", v.hits}});
  }

  jnr::ojson rep;
  rep["schema"] = "jnr-report/1";
  rep["command"] = "classify";
  rep["input"] = {{"source", in.source}, {"n", t.dim()}, {"digest", jnr::input_digest(t)}};
  rep["seed"] = seed;
  rep["settings"] = jnr::settings_to_json(cfg);
  jnr::ojson jt = jnr::ojson::array();
  for (const jnr::RankOneTuple& tup : tuples) jt.push_back(jnr::tuple_to_json(tup));
  rep["rank_one_tuples"] = std::move(jt);
  jnr::ojson jf = jnr::ojson::array();
  for (const jnr::FaceRecord& f : sig.faces) jf.push_back(jnr::face_to_json(f));
  rep["non_elliptic_faces"] = std::move(jf);
  jnr::ojson jo = jnr::ojson::array();
  for (const jnr::FaceRecord& f : sig.other_flat) jo.push_back(jnr::face_to_json(f));
  rep["other_flat_faces"] = std::move(jo);
  rep["class"] = {{"counts", sig.counts},
                  {"class_index", sig.column},
                  {"corner_implied", sig.corner_implied},
                  {"continuum_suspected", sig.continuum_suspected}};
  jnr::ojson je = jnr::ojson::array();
  for (const jnr::EllipticFace& e : census) je.push_back(jnr::elliptic_to_json(e));
  rep["elliptic_faces"] = std::move(je);
  rep["corner_candidates"] = std::move(corners);
  rep["events"] = jnr::events_to_json(events);

  if (as_json || !out.empty()) {
    std::string text = rep.dump(2) + "\n";
    if (!out.empty())
      write_file(out, text);
    else
      std::cout << text;
  }
  if (!as_json) {
    std::cout << "input " << in.source << " (n=" << t.dim() << ", digest " << jnr::input_digest(t)
              << ")\n";
    std::cout << "flat-face counts (ovals,loaves,droplets,triangles): " << sig.counts[0] << ","
              << sig.counts[1] << "," << sig.counts[2] << "," << sig.counts[3] << "\n";
    std::cout << "class_index " << sig.column
              << (sig.corner_implied ? " (corner point implied)" : "") << "\n";
    for (const jnr::FaceRecord& f : sig.faces)
      std::cout << "  face " << jnr::shape_name(f.shape.tag) << " at u=(" << f.tuple.u[0] << ","
                << f.tuple.u[1] << "," << f.tuple.u[2] << "), support " << f.support_value
                << "\n";
    for (const jnr::FaceRecord& f : sig.other_flat)
      std::cout << "  flat face (" << jnr::shape_name(f.shape.tag) << ") at u=(" << f.tuple.u[0]
                << "," << f.tuple.u[1] << "," << f.tuple.u[2] << ")\n";
    std::cout << "elliptic faces found by census: " << census.size() << "\n";
    std::cout << "corner points among joint-spectrum candidates: " << corner_count << "/"
              << spectrum.size() << "\n";
    for (const jnr::Event& e : events)
      std::cout << "  [" << (e.severity == jnr::Event::Severity::warning ? "warning"
                                                                         : "falsification")
                << "] " << e.claim << ": " << e.message << "\n";
  }
  return 0;
}

int run_boundary(const std::string& input, int dirs, uint64_t seed, double tol,
                 const std::string& out, bool with_sep) {
  if (dirs < 4) {
    std::cerr << "error: --dirs must be at least 4\n";
    return 1;
  }
  jnr::Settings cfg = make_settings(tol);
  InputSpec in = load_input(input, cfg);
  const jnr::MatrixTriple& t = in.file.triple;

  jnr::BoundaryMesh mesh = jnr::sample_boundary(t, dirs, seed, cfg);
  std::ostringstream obj;
  jnr::write_obj(mesh, obj);
  write_file(out, obj.str());
  std::cout << "wrote " << out << " (" << mesh.hull_vertices.size() << " hull vertices, "
            << mesh.triangles.size() << " facets"
            << (mesh.degenerate ? ", degenerate" : "") << ")\n";

  if (with_sep) {
    if (t.dim() != 4) {
      std::cerr << "error: --sep needs a two-qubit (n=4) triple\n";
      return 1;
    }
    jnr::SepSample s = jnr::sample_sep_boundary(t, dirs, seed, cfg);
    jnr::BoundaryMesh sep_mesh;
    sep_mesh.vertices = s.points;
    for (const jnr::HullFace& f : s.hull.faces) sep_mesh.triangles.push_back({f.a, f.b, f.c});
    sep_mesh.hull_vertices = s.hull.vertex_indices;
    sep_mesh.degenerate = s.hull.degenerate;
    std::string stem = out_stem(out);
    std::ostringstream sep_obj;
    jnr::write_obj(sep_mesh, sep_obj);
    write_file(stem + "_sep.obj", sep_obj.str());
    std::ostringstream csv;
    jnr::write_gap_csv(csv, s);
    write_file(stem + "_gap.csv", csv.str());
    double worst = 0.0;
    for (size_t i = 0; i < s.dirs.size(); ++i)
      worst = std::max(worst, s.sep_values[i] - s.jnr_values[i]);
    std::cout << "wrote " << stem << "_sep.obj and " << stem << "_gap.csv (max support gap "
              << worst << ")\n";
  }
  return 0;
}

int run_separable(const std::string& input, int dirs, uint64_t seed, double tol, int restarts,
                  bool as_json, const std::string& out) {
  if (dirs < 4) {
    std::cerr << "error: --dirs must be at least 4\n";
    return 1;
  }
  jnr::Settings cfg = make_settings(tol);
  if (restarts > 0) cfg.seesaw_restarts = restarts;
  InputSpec in = load_input(input, cfg);
  const jnr::MatrixTriple& t = in.file.triple;
  if (t.dim() != 4) {
    std::cerr << "error: separable analysis needs a two-qubit (n=4) triple\n";
    return 1;
  }
  std::vector<jnr::Event> events;
  jnr::SepSample s = jnr::sample_sep_boundary(t, dirs, seed, cfg);
  jnr::ProbeReport probe = jnr::segment_probe(t, std::min(dirs, 600), seed, cfg, &events);

  double worst = 0.0, mean = 0.0;
  for (size_t i = 0; i < s.dirs.size(); ++i) {
    double g = s.sep_values[i] - s.jnr_values[i];
    worst = std::max(worst, g);
    mean += g / static_cast<double>(s.dirs.size());
  }

  if (as_json) {
    jnr::ojson rep;
    rep["schema"] = "jnr-report/1";
    rep["command"] = "separable";
    rep["input"] = {{"source", in.source}, {"n", t.dim()}, {"digest", jnr::input_digest(t)}};
    rep["seed"] = seed;
    rep["settings"] = jnr::settings_to_json(cfg);
    jnr::ojson rows = jnr::ojson::array();
    for (size_t i = 0; i < s.dirs.size(); ++i)
      rows.push_back({{"direction", jnr::vec3_to_json(s.dirs[i])},
                      {"w_support", s.jnr_values[i]},
                      {"sep_support", s.sep_values[i]}});
    rep["directions"] = std::move(rows);
    rep["max_gap"] = worst;
    rep["mean_gap"] = mean;
    rep["flat_spots_flagged"] = probe.flagged;
    rep["events"] = jnr::events_to_json(events);
    std::string text = rep.dump(2) + "\n";
    if (!out.empty())
      write_file(out, text);
    else
      std::cout << text;
    return 0;
  }
  if (!out.empty()) {
    std::ostringstream csv;
    jnr::write_gap_csv(csv, s);
    write_file(out, csv.str());
    std::cout << "wrote " << out << "\n";
  }
  std::cout << "separable support over " << dirs << " directions: max gap " << worst
            << ", mean gap " << mean << ", flagged flat spots " << probe.flagged << "\n";
  for (const jnr::Event& e : events)
    std::cout << "  [" << (e.severity == jnr::Event::Severity::warning ? "warning"
                                                                       : "falsification")
              << "] " << e.claim << ": " << e.message << "\n";
  return 0;
}

int run_spectrum(const std::string& input, uint64_t seed, double tol, bool as_json) {
  jnr::Settings cfg = make_settings(tol);
  InputSpec in = load_input(input, cfg);
  const jnr::MatrixTriple& t = in.file.triple;
  std::vector<jnr::JointSpectrumPoint> pts = jnr::joint_spectrum(t, cfg);
  if (as_json) {
    jnr::ojson rep;
    rep["schema"] = "jnr-report/1";
    rep["command"] = "spectrum";
    rep["input"] = {{"source", in.source}, {"n", t.dim()}, {"digest", jnr::input_digest(t)}};
    jnr::ojson rows = jnr::ojson::array();
    for (const jnr::JointSpectrumPoint& p : pts) {
      jnr::CornerVerdict v = jnr::is_corner_point(t, p.value, cfg, seed);
      rows.push_back({{"value", jnr::vec3_to_json(p.value)},
                      {"residual", p.residual},
                      {"is_corner", v.is_corner}});
    }
    rep["joint_spectrum"] = std::move(rows);
    std::cout << rep.dump(2) << "\n";
    return 0;
  }
  std::cout << "joint spectrum of " << in.source << ": " << pts.size() << " point(s)\n";
  for (const jnr::JointSpectrumPoint& p : pts) {
    jnr::CornerVerdict v = jnr::is_corner_point(t, p.value, cfg, seed);
    std::cout << "  (" << p.value[0] << "," << p.value[1] << "," << p.value[2] << ") residual "
              << p.residual << (v.is_corner ? "  corner point" : "") << "\n";
  }
  return 0;
}

int run_verify(const std::string& only, uint64_t seed, double tol) {
  jnr::verify::Engine eng;
  eng.cfg = make_settings(tol);
  eng.seed = seed;
  eng.only = only;
  std::vector<jnr::verify::CriterionResult> results = jnr::verify::run_acceptance(eng, std::cout);
  return jnr::verify::gated_failures(results) == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary structure of joint numerical ranges of hermitian matrix triples"};
  app.require_subcommand(1);

  std::string input, out, only;
  uint64_t seed = 1;
  double tol = -1.0;
  int dirs = 0, restarts = 0;
  bool as_json = false, with_sep = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("input", input, "fixture id (e.g. E5) or JSON triple file")->required();
    cmd->add_option("--seed", seed, "RNG seed (default 1)");
    cmd->add_option("--tol", tol, "pencil acceptance tolerance (default 1e-8)");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "full face/class/corner pipeline (n=4)");
  add_common(c_classify, true);
  c_classify->add_flag("--json", as_json, "emit the JSON report");
  c_classify->add_option("--out", out, "write the JSON report to a file");

  CLI::App* c_boundary = app.add_subcommand("boundary", "sample the boundary and export a mesh");
  add_common(c_boundary, true);
  c_boundary->add_option("--dirs", dirs, "number of support directions (default 1000, min 4)");
  c_boundary->add_option("--out", out, "OBJ output path (default boundary.obj)");
  c_boundary->add_flag("--sep", with_sep, "also export the separable-range mesh and gap CSV");

  CLI::App* c_sep = app.add_subcommand("separable", "per-direction separable support analysis");
  add_common(c_sep, true);
  c_sep->add_option("--dirs", dirs, "number of directions (default 200, min 4)");
  c_sep->add_option("--restarts", restarts, "product-search restarts per direction");
  c_sep->add_flag("--json", as_json, "emit the JSON report");
  c_sep->add_option("--out", out, "write the per-direction gap CSV (or JSON with --json)");

  CLI::App* c_spec = app.add_subcommand("spectrum", "joint spectrum and corner candidates");
  add_common(c_spec, true);
  c_spec->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* c_verify = app.add_subcommand("verify-paper", "replay the documented example corpus");
  c_verify->add_option("--only", only, "restrict checks to one fixture id");
  c_verify->add_option("--seed", seed, "RNG seed (default 1)");
  c_verify->add_option("--tol", tol, "pencil acceptance tolerance (default 1e-8)");

  CLI::App* c_fix = app.add_subcommand("fixtures", "list bundled fixture ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_classify->parsed()) return run_classify(input, seed, tol, as_json, out);
    if (c_boundary->parsed())
      return run_boundary(input, dirs > 0 ? dirs : 1000, seed, tol,
                          out.empty() ? "boundary.obj" : out, with_sep);
    if (c_sep->parsed())
      return run_separable(input, dirs > 0 ? dirs : 200, seed, tol, restarts, as_json, out);
    if (c_spec->parsed()) return run_spectrum(input, seed, tol, as_json);
    if (c_verify->parsed()) return run_verify(only, seed, tol);
    if (c_fix->parsed()) {
      for (const std::string& id : jnr::fixtures::ids())
        std::cout << id << "  " << jnr::fixtures::load(id).note << "\n";
      return 0;
    }
  } catch (const jnr::DegenerateRangeError& e) {
    std::cerr << "degenerate range: " << e.what() << "\n";
    return 3;
  } catch (const jnr::ClassificationError& e) {
    std::cerr << "classification failed: " << e.what() << "\n";
    return 2;
  } catch (const jnr::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
