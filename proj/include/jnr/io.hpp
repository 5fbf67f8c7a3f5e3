#pragma once

// JSON input format for matrix triples, symbolic entry values, report
// serialization, and the per-direction gap CSV. The input document is
// { "n": int, "matrices": [M1, M2, M3] } with each M an n x n array of
// [re, im] pairs; entries may be numbers or symbolic strings such as
// "sqrt(2)", "-1/2", "1/sqrt(2)", "-sqrt(3)/2".

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "jnr/classify.hpp"
#include "jnr/corners.hpp"
#include "jnr/detect.hpp"
#include "jnr/linalg.hpp"
#include "jnr/separable.hpp"
#include "jnr/settings.hpp"

namespace jnr {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric value of a symbolic entry: integers, decimals, a/b, sqrt(a),
// a/sqrt(b), sqrt(a)/b, each with an optional leading minus.
inline double parse_symbolic(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty numeric entry");

  double sign = 1.0;
  size_t pos = 0;
  if (s[0] == '-') {
    sign = -1.0;
    pos = 1;
  } else if (s[0] == '+') {
    pos = 1;
  }

  auto number = [&](size_t& p) {
    size_t start = p;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.')) ++p;
    if (p == start) throw ParseError("malformed numeric entry: " + text);
    return std::stod(s.substr(start, p - start));
  };
  auto sqrt_term = [&](size_t& p) {
    p += 5;  // "sqrt("
    double v = number(p);
    if (p >= s.size() || s[p] != ')') throw ParseError("malformed sqrt entry: " + text);
    ++p;
    if (v < 0.0) throw ParseError("sqrt of a negative value: " + text);
    return std::sqrt(v);
  };

  double value;
  if (s.compare(pos, 5, "sqrt(") == 0) {
    value = sqrt_term(pos);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      value /= number(pos);
    }
  } else {
    value = number(pos);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      if (s.compare(pos, 5, "sqrt(") == 0)
        value /= sqrt_term(pos);
      else
        value /= number(pos);
    }
  }
  if (pos != s.size()) throw ParseError("trailing characters in numeric entry: " + text);
  if (!std::isfinite(value)) throw ParseError("entry is not finite: " + text);
  return sign * value;
}

inline double entry_value(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_symbolic(j.get<std::string>());
  throw ParseError("matrix entry must be a number or a symbolic string");
}

struct TripleFile {
  int n = 0;
  std::vector<std::string> labels;
  MatrixTriple triple;
};

inline TripleFile parse_triple_json(const json& doc, const Settings& cfg = Settings{}) {
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"");
  int n = doc["n"].get<int>();
  if (n < 2 || n > kMaxDim) throw ParseError("order n must be between 2 and 5");
  if (!doc.contains("matrices") || !doc["matrices"].is_array() || doc["matrices"].size() != 3)
    throw ParseError("field \"matrices\" must be an array of three matrices");

  std::array<HermitianMatrix, 3> mats{HermitianMatrix(n), HermitianMatrix(n), HermitianMatrix(n)};
  for (int m = 0; m < 3; ++m) {
    const json& jm = doc["matrices"][static_cast<size_t>(m)];
    if (!jm.is_array() || jm.size() != static_cast<size_t>(n))
      throw ParseError("matrix " + std::to_string(m + 1) + " must have " + std::to_string(n) + " rows");
    CMat raw(n);
    for (int i = 0; i < n; ++i) {
      const json& row = jm[static_cast<size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<size_t>(n))
        throw ParseError("matrix " + std::to_string(m + 1) + " row " + std::to_string(i + 1) +
                         " must have " + std::to_string(n) + " entries");
      for (int k = 0; k < n; ++k) {
        const json& e = row[static_cast<size_t>(k)];
        if (!e.is_array() || e.size() != 2)
          throw ParseError("matrix entries must be [re, im] pairs");
        raw.at(i, k) = cplx{entry_value(e[0]), entry_value(e[1])};
      }
    }
    try {
      mats[static_cast<size_t>(m)] = HermitianMatrix::from(raw, cfg.hermiticity_rel_tol);
    } catch (const std::invalid_argument&) {
      throw ParseError("matrix " + std::to_string(m + 1) +
                       " is not hermitian within the input tolerance");
    }
  }

  TripleFile tf{n, {}, MatrixTriple(mats[0], mats[1], mats[2])};
  if (doc.contains("labels") && doc["labels"].is_array())
    for (const json& l : doc["labels"]) tf.labels.push_back(l.get<std::string>());
  return tf;
}

inline TripleFile parse_triple_text(const std::string& text, const Settings& cfg = Settings{}) {
  json doc = json::parse(text, nullptr, false, true);  // allow comments, no throw
  if (doc.is_discarded()) throw ParseError("input is not valid json");
  return parse_triple_json(doc, cfg);
}

inline ojson triple_to_json(const MatrixTriple& t) {
  ojson doc;
  doc["n"] = t.dim();
  ojson ms = ojson::array();
  for (const HermitianMatrix* m : {&t.a1, &t.a2, &t.a3}) {
    ojson rows = ojson::array();
    for (int i = 0; i < t.dim(); ++i) {
      ojson row = ojson::array();
      for (int j = 0; j < t.dim(); ++j) {
        cplx v = m->at(i, j);
        row.push_back(ojson::array({std::real(v), std::imag(v)}));
      }
      rows.push_back(std::move(row));
    }
    ms.push_back(std::move(rows));
  }
  doc["matrices"] = std::move(ms);
  return doc;
}

// FNV-1a digest of the canonical serialization; identifies inputs in reports.
inline std::string input_digest(const MatrixTriple& t) {
  std::string text = triple_to_json(t).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline ojson vec3_to_json(const Vec3& v) { return ojson::array({v[0], v[1], v[2]}); }

inline ojson tuple_to_json(const RankOneTuple& t) {
  ojson j;
  j["u0"] = t.u0;
  j["u"] = vec3_to_json(t.u);
  j["gap"] = t.gap;
  j["minor_residual"] = t.minor_residual;
  return j;
}

inline ojson shape_to_json(const ShapeDetails& s) {
  ojson j;
  j["class"] = shape_name(s.tag);
  if (s.ellipse) {
    j["ellipse"] = {{"center", ojson::array({s.ellipse->center[0], s.ellipse->center[1]})},
                    {"semi_major", s.ellipse->semi_major()},
                    {"semi_minor", s.ellipse->semi_minor()}};
  }
  if (s.isolated_point)
    j["isolated_point"] = ojson::array({(*s.isolated_point)[0], (*s.isolated_point)[1]});
  if (s.loaf_tuple)
    j["loaf_tuple"] = ojson::array({(*s.loaf_tuple)[0], (*s.loaf_tuple)[1], (*s.loaf_tuple)[2]});
  if (s.boundary_case) j["boundary_case"] = true;
  if (s.borderline_irreducibility) j["borderline_irreducibility"] = true;
  return j;
}

inline ojson face_to_json(const FaceRecord& f) {
  ojson j;
  j["direction"] = vec3_to_json(f.tuple.u);
  j["u0"] = f.tuple.u0;
  j["support_value"] = f.support_value;
  j["rank"] = 1;  // shifted pencil rank at a rank-one tuple
  j["dim"] = (f.shape.tag == ShapeClass::point) ? 0 : (f.shape.tag == ShapeClass::segment ? 1 : 2);
  j["shape"] = shape_to_json(f.shape);
  ojson segs = ojson::array();
  for (const Segment3& s : f.segments)
    segs.push_back({{"a", vec3_to_json(s.a)}, {"b", vec3_to_json(s.b)}, {"length", s.length()}});
  j["segments"] = std::move(segs);
  return j;
}

inline ojson elliptic_to_json(const EllipticFace& e) {
  ojson j;
  j["direction"] = vec3_to_json(e.direction.u);
  j["support_value"] = e.support_value;
  j["center"] = vec3_to_json(e.center);
  j["semi_axis_1"] = vec3_to_json(e.axis1);
  j["semi_axis_2"] = vec3_to_json(e.axis2);
  j["fit_residual"] = e.fit_residual;
  return j;
}

inline ojson events_to_json(const std::vector<Event>& events) {
  ojson arr = ojson::array();
  for (const Event& e : events)
    arr.push_back({{"severity", e.severity == Event::Severity::warning ? "warning" : "falsification"},
                   {"claim", e.claim},
                   {"message", e.message}});
  return arr;
}

inline ojson settings_to_json(const Settings& cfg) {
  ojson j;
  j["cluster_gap_tol"] = cfg.cluster_gap_tol;
  j["tuple_accept_tol"] = cfg.tuple_accept_tol;
  j["minor_tol"] = cfg.minor_tol;
  j["ellipse_fit_tol"] = cfg.ellipse_fit_tol;
  j["corner_support_tol"] = cfg.corner_support_tol;
  j["search_grid"] = cfg.search_grid;
  j["seesaw_restarts"] = cfg.seesaw_restarts;
  return j;
}

inline void write_gap_csv(std::ostream& os, const SepSample& s) {
  os << "ux,uy,uz,w_support,sep_support,gap\n";
  os.precision(12);
  for (size_t i = 0; i < s.dirs.size(); ++i) {
    const Vec3& u = s.dirs[i];
    os << u[0] << ',' << u[1] << ',' << u[2] << ',' << s.jnr_values[i] << ',' << s.sep_values[i]
       << ',' << (s.sep_values[i] - s.jnr_values[i]) << '\n';
  }
}

}  // namespace jnr
