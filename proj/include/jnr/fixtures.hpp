#pragma once

// Bundled example corpus: every triple (or 3x3 pair) used by the golden
// tests, stored as JSON text in the CLI input format together with its
// documented expected verdicts.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jnr/classify.hpp"
#include "jnr/io.hpp"
#include "jnr/linalg.hpp"

namespace jnr {

struct ExpectedTuple {
  double u0;
  Vec3 u;
};

struct GalleryExample {
  std::string id;
  std::string note;
  bool is_pair = false;      // 3x3 pair fixture: classify (a1, a2) directly
  int class_column = -1;     // expected column of the admissible-configuration table
  std::vector<ExpectedTuple> tuples;  // documented rank-one tuples (unnormalized)
  std::vector<Vec3> corners;          // documented corner points
  std::optional<ShapeClass> pair_shape;
  int elliptic_count = -1;   // documented number of elliptic faces
  TripleFile file;
};

namespace fixtures {

struct RawFixture {
  const char* id;
  const char* text;
};

inline const std::vector<RawFixture>& raw_fixtures() {
  static const std::vector<RawFixture> table = {
      {"E0", R"json({
"n": 4,
"matrices": [
 [[[0,0],[1,0],[0,0],[0,0]], [[1,0],[0,0],[0,1],[0,0]], [[0,0],[0,-1],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[1,0],[0,0],[0,1]], [[0,0],[0,0],[0,-1],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,1]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]], [[0,-1],[0,0],[1,0],[0,0]]]
]})json"},
      {"E1", R"json({
"n": 4,
"matrices": [
 [[[0,0],[0,1],[0,1],[-2,0]], [[0,-1],[0,0],[0,1],[2,0]], [[0,-1],[0,-1],[0,0],[0,2]], [[-2,0],[2,0],[0,-2],[0,0]]],
 [[[-2,0],[1,0],[1,0],[0,-2]], [[1,0],[1,0],[1,0],[0,2]], [[1,0],[1,0],[1,0],[2,0]], [[0,2],[0,-2],[2,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[-4,0]]]
]})json"},
      {"E2", R"json({
"n": 4,
"matrices": [
 [[[0,0],[0,0],[0,0],[1,0]], [[0,0],[0,0],[0,0],[-1,0]], [[0,0],[0,0],["-sqrt(2)",0],[0,-1]], [[1,0],[-1,0],[0,1],[0,0]]],
 [[["-1/sqrt(2)",0],[0,0],[0,"1/sqrt(2)"],[0,-1]], [[0,0],["1/sqrt(2)",0],[0,"1/sqrt(2)"],[0,1]], [[0,"-1/sqrt(2)"],[0,"-1/sqrt(2)"],[0,0],[1,0]], [[0,1],[0,-1],[1,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[2,0]]]
]})json"},
      {"E3", R"json({
"n": 4,
"matrices": [
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[["3/4",0],[0,"-1/4"],["1/4",0],[0,"1/4"]], [[0,"1/4"],["3/4",0],[0,"-1/4"],["1/4",0]], [["1/4",0],[0,"1/4"],["3/4",0],[0,"-1/4"]], [[0,"-1/4"],["1/4",0],[0,"1/4"],["3/4",0]]],
 [[[0,0],["1/2",0],[0,0],["-1/2",0]], [["1/2",0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [["-1/2",0],[0,0],[0,0],[0,0]]]
]})json"},
      {"E4", R"json({
"n": 4,
"matrices": [
 [[[2,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,1]], [[0,0],[0,0],[0,-1],[1,0]]],
 [[["1/2",0],["-1/2",0],["1/2",0],[0,0]], [["-1/2",0],[1,0],[0,0],[0,0]], [["1/2",0],[0,0],[0,0],[1,0]], [[0,0],[0,0],[1,0],[0,0]]]
]})json"},
      {"E5", R"json({
"n": 4,
"matrices": [
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[["-1/2",0],[0,0],[0,"-1/2"],[0,0]], [[0,0],["1/2",0],["1/2",0],[0,0]], [[0,"1/2"],["1/2",0],[0,0],["1/2",0]], [[0,0],[0,0],["1/2",0],[0,0]]]
]})json"},
      {"E6", R"json({
"n": 4,
"matrices": [
 [[[-1,0],[1,0],[0,0],[-1,0]], [[1,0],[-1,0],[0,0],[1,0]], [[0,0],[0,0],[1,0],[0,1]], [[-1,0],[1,0],[0,-1],[0,0]]],
 [[[0,0],[0,-1],[0,0],[0,-1]], [[0,1],[0,0],[0,0],[0,1]], [[0,0],[0,0],[0,0],[1,0]], [[0,1],[0,-1],[1,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[-2,0]]]
]})json"},
      {"E7a", R"json({
"n": 4,
"matrices": [
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[1,0]], [[0,0],[0,0],[1,0],[1,0]]],
 [[[0,0],[1,0],[0,0],[0,0]], [[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,1]], [[0,0],[0,0],[0,-1],[1,0]]],
 [[[1,0],[0,1],[0,0],[0,0]], [[0,-1],[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"E7b", R"json({
"n": 4,
"matrices": [
 [[[-1,0],[0,0],["sqrt(2)",0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [["sqrt(2)",0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[-1,0],[0,0],["-sqrt(2)",0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [["-sqrt(2)",0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[2,0],[0,0],[0,0]], [[2,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]
]})json"},
      {"E8", R"json({
"n": 4,
"matrices": [
 [[[2,0],[0,0],[0,0],[0,0]], [[0,0],[2,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,1]], [[0,0],[0,0],[0,-1],[1,0]]],
 [[[1,0],[0,0],[0,-1],[0,0]], [[0,0],[2,0],[0,0],[0,0]], [[0,1],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[2,0]]],
 [[[1,0],[0,0],[0,0],[0,1]], [[0,0],[2,0],[0,0],[0,0]], [[0,0],[0,0],[2,0],[0,0]], [[0,-1],[0,0],[0,0],[1,0]]]
]})json"},
      {"E9", R"json({
"n": 4,
"matrices": [
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],["sqrt(2)",0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [["sqrt(2)",0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[-2,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"E10", R"json({
"n": 4,
"matrices": [
 [[[1,0],[0,-1],[0,0],[0,0]], [[0,1],[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[1,0],[0,0],[0,0]], [[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"E11", R"json({
"n": 4,
"matrices": [
 [[[1,0],[0,0],[0,"sqrt(2)"],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,"-sqrt(2)"],[0,0],[2,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,"-sqrt(2)"],[0,0]], [[0,0],[0,"sqrt(2)"],[2,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[2,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"E12", R"json({
"n": 4,
"matrices": [
 [[["sqrt(3)",0],[0,0],[0,0],[-1,0]], [[0,0],["-sqrt(3)/2",0],[0,0],[1,0]], [[0,0],[0,0],["-sqrt(3)/2",0],[0,-1]], [[-1,0],[1,0],[0,1],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,1]], [[0,0],["3/2",0],[0,0],[0,-1]], [[0,0],[0,0],["-3/2",0],[1,0]], [[0,-1],[0,1],[1,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[-2,0]]]
]})json"},
      {"E13", R"json({
"n": 4,
"matrices": [
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[-1,0]]],
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],["1/2",0]], [[0,0],[0,0],["1/2",0],[0,0]]],
 [[[0,0],[1,0],[0,0],[0,0]], [[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,-1]], [[0,0],[0,0],[0,1],[0,0]]]
]})json"},
      {"E14", R"json({
"n": 4,
"matrices": [
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [[0,0],[0,0],[-1,0],[0,0]], [[0,0],[0,0],[0,0],[-1,0]]],
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[-1,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[-1,0]]],
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[-1,0],[0,0],[0,0]], [[0,0],[0,0],[-1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]
]})json"},
      {"five-ellipse", R"json({
"n": 4,
"matrices": [
 [[[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]]],
 [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]
]})json"},
      {"six-dice", R"json({
"n": 4,
"matrices": [
 [[["1/sqrt(2)",0],["1/sqrt(2)",0],[0,0],[0,0]], [["1/sqrt(2)",0],["-1/sqrt(2)",0],[0,0],[0,0]], [[0,0],[0,0],["-1/sqrt(2)",0],["1/sqrt(2)",0]], [[0,0],[0,0],["1/sqrt(2)",0],["1/sqrt(2)",0]]],
 [[[0,0],[-1,0],[0,0],[0,0]], [[-1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]], [[0,0],[0,0],[1,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[-1,0]], [[0,0],[0,0],[0,1],[0,0]], [[0,0],[0,-1],[0,0],[0,0]], [[-1,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"ring", R"json({
"n": 4,
"matrices": [
 [[["1/sqrt(2)",0],["1/sqrt(2)",0],[0,0],[0,0]], [["1/sqrt(2)",0],["-1/sqrt(2)",0],[0,0],[0,0]], [[0,0],[0,0],["-1/sqrt(2)",0],["1/sqrt(2)",0]], [[0,0],[0,0],["1/sqrt(2)",0],["1/sqrt(2)",0]]],
 [[[0,0],[-1,0],[0,0],[0,0]], [[-1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]], [[0,0],[0,0],[1,0],[0,0]]],
 [[[0,0],[0,0],[0,0],[-1,0]], [[0,0],[0,0],[1,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [[-1,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"random-gue", R"json({
"n": 4,
"matrices": [
 [[[-3,0],[-9,-6],[-15,-1],[-2,13]], [[-9,6],[6,0],[-2,5],[-2,10]], [[-15,1],[-2,-5],[-10,0],[-6,-7]], [[-2,-13],[-2,-10],[-6,7],[3,0]]],
 [[[11,0],[9,2],[2,-5],[-1,-2]], [[9,-2],[-9,0],[-4,-3],[1,-4]], [[2,5],[-4,3],[-16,0],[10,-12]], [[-1,2],[1,4],[10,12],[-2,0]]],
 [[[15,0],[10,-3],[5,5],[0,-1]], [[10,3],[-6,0],[-16,-2],[15,0]], [[5,-5],[-16,2],[3,0],[-9,-7]], [[0,1],[15,0],[-9,7],[-13,0]]]
]})json"},
      {"three-segments-n5", R"json({
"n": 5,
"matrices": [
 [[[0,0],[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[-1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[-1,0],[0,0]], [[0,0],[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[1,0],[0,0],[0,0],[0,0]], [[1,0],[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[-1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[0,0],[0,0]]],
 [[[0,0],[0,-1],[0,0],[0,0],[0,0]], [[0,1],[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"two-ellipses", R"json({
"n": 4,
"matrices": [
 [[[-1,0],[0,0],["sqrt(2)",0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [["sqrt(2)",0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[-1,0],[0,0],["-sqrt(2)",0],[0,0]], [[0,0],[1,0],[0,0],[0,0]], [["-sqrt(2)",0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
 [[[0,0],[2,0],[0,0],[0,0]], [[2,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]]
]})json"},
      {"bordered-3x3", R"json({
"n": 3,
"matrices": [
 [[[1,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[1,0]], [[0,0],[0,0],[0,0]], [[1,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]]
]})json"},
      {"type-exemplar-0", R"json({
"n": 3,
"matrices": [
 [[[-1,0],["1/2",0],["1/2",0]], [["1/2",0],["1/2",0],["1/2",0]], [["1/2",0],["1/2",0],["1/2",0]]],
 [[[0,0],[0,"-1/2"],[0,"-1/2"]], [[0,"1/2"],[0,0],[0,"-1/2"]], [[0,"1/2"],[0,"1/2"],[0,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]]
]})json"},
      {"type-exemplar-1", R"json({
"n": 3,
"matrices": [
 [[["1/2",0],[0,0],[0,"-1/2"]], [[0,0],["-1/2",0],[0,"-1/2"]], [[0,"1/2"],[0,"1/2"],[0,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]]
]})json"},
      {"type-exemplar-2", R"json({
"n": 3,
"matrices": [
 [[[1,0],[1,0],[0,0]], [[1,0],[1,0],[0,0]], [[0,0],[0,0],[0,0]]],
 [[[0,0],[0,-1],[0,0]], [[0,1],[0,0],[0,0]], [[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]]
]})json"},
      {"type-exemplar-3", R"json({
"n": 3,
"matrices": [
 [[[-1,0],[0,0],[0,0]], [[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[1,0]]],
 [[[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0]]]
]})json"},
  };
  return table;
}

inline std::vector<std::string> ids() {
  std::vector<std::string> out;
  for (const RawFixture& f : raw_fixtures()) out.emplace_back(f.id);
  return out;
}

inline const char* raw_text(const std::string& id) {
  for (const RawFixture& f : raw_fixtures())
    if (id == f.id) return f.text;
  throw std::invalid_argument("unknown fixture id: " + id);
}

inline GalleryExample load(const std::string& id) {
  TripleFile tf = parse_triple_text(raw_text(id));
  GalleryExample ex{id, "", false, -1, {}, {}, std::nullopt, -1, std::move(tf)};

  auto T = [](double u0, double x, double y, double z) {
    return ExpectedTuple{u0, Vec3{x, y, z}};
  };

  if (id == "E0") {
    ex.note = "generic boundary, no flat faces";
    ex.class_column = 0;
  } else if (id == "E1") {
    ex.note = "single oval face";
    ex.class_column = 1;
    ex.tuples = {T(0, 0, 0, 1)};
  } else if (id == "E2") {
    ex.note = "single loaf face";
    ex.class_column = 2;
    ex.tuples = {T(0, 0, 0, 1)};
  } else if (id == "E3") {
    ex.note = "two loaf faces";
    ex.class_column = 3;
    ex.tuples = {T(-1, 1, 0, 0), T(-1, 0, 1, 0)};
  } else if (id == "E4") {
    ex.note = "a loaf and a droplet face";
    ex.class_column = 4;
    ex.tuples = {T(0, 1, 0, 0), T(0, 0, 1, 0)};
  } else if (id == "E5") {
    ex.note = "a loaf and a triangular face";
    ex.class_column = 5;
    ex.tuples = {T(0, 1, 0, 0), T(0, 0, 1, 0)};
  } else if (id == "E6") {
    ex.note = "single droplet face";
    ex.class_column = 6;
    ex.tuples = {T(0, 0, 0, 1)};
  } else if (id == "E7a") {
    ex.note = "two droplet faces from two orthogonal circles";
    ex.class_column = 7;
    ex.tuples = {T(0, 1, 0, 0), T(0, 0, 0, 1)};
  } else if (id == "E7b") {
    ex.note = "two droplet faces sharing a corner";
    ex.class_column = 7;
    ex.tuples = {T(-1, 1, 0, 0), T(-1, 0, 1, 0)};
    ex.corners = {Vec3{1, 1, 1}};
  } else if (id == "E8") {
    ex.note = "three droplet faces";
    ex.class_column = 8;
    ex.tuples = {T(-2, 1, 0, 0), T(-2, 0, 1, 0), T(-2, 0, 0, 1)};
    ex.corners = {Vec3{2, 2, 2}};
  } else if (id == "E9") {
    ex.note = "a droplet and a triangular face";
    ex.class_column = 9;
    ex.tuples = {T(0, 0, 0, 1), T(-1, 1, 0, 0)};
    ex.corners = {Vec3{1, 1, 0}};
  } else if (id == "E10") {
    ex.note = "a droplet and two triangular faces";
    ex.class_column = 10;
    ex.tuples = {T(0, 0, 0, 1), T(-1, 0, 1, 0), T(0, 1, 0, 0)};
    ex.corners = {Vec3{0, 1, 1}, Vec3{0, 1, 0}};
  } else if (id == "E11") {
    ex.note = "two droplets and a triangle";
    ex.class_column = 11;
    ex.tuples = {T(0, 1, 0, 0), T(0, 0, 1, 0), T(0, 0, 0, 1)};
    ex.corners = {Vec3{0, 0, 0}};
  } else if (id == "E12") {
    ex.note = "single triangular face";
    ex.class_column = 12;
    ex.tuples = {T(0, 0, 0, 1)};
  } else if (id == "E13") {
    ex.note = "two triangular faces";
    ex.class_column = 13;
    ex.tuples = {T(-2, std::sqrt(3.0), 2, 0), T(-2, -std::sqrt(3.0), 2, 0)};
    ex.corners = {Vec3{0, 1, 1}, Vec3{0, 1, -1}};
  } else if (id == "E14") {
    ex.note = "tetrahedron, four triangular faces";
    ex.class_column = 14;
    ex.tuples = {T(1, 1, 1, 1), T(1, 1, -1, -1), T(1, -1, 1, -1), T(1, -1, -1, 1)};
    ex.corners = {Vec3{1, 1, 1}, Vec3{1, -1, -1}, Vec3{-1, 1, -1}, Vec3{-1, -1, 1}};
  } else if (id == "five-ellipse") {
    ex.note = "five elliptic faces, the top one of rank 3";
    ex.class_column = 0;
    ex.elliptic_count = 5;
    ex.tuples = {T(1, 0, 0, -1)};
  } else if (id == "six-dice") {
    ex.note = "six pairwise disjoint elliptic faces";
    ex.class_column = 0;
    ex.elliptic_count = 6;
  } else if (id == "ring") {
    ex.note = "six elliptic faces, four intersecting in a ring";
    ex.class_column = 0;
    ex.elliptic_count = 6;
  } else if (id == "random-gue") {
    ex.note = "rounded random hermitian triple for separable-range comparisons";
  } else if (id == "three-segments-n5") {
    ex.note = "5x5 triple whose three boundary segments meet at a non-corner";
  } else if (id == "two-ellipses") {
    ex.note = "two rank-3 elliptic faces meeting at a point";
    ex.tuples = {T(1, -1, 0, 0), T(1, 0, -1, 0)};
  } else if (id == "bordered-3x3") {
    ex.note = "reducible pair whose split-off point lies on the ellipse";
    ex.is_pair = true;
    ex.pair_shape = ShapeClass::ellipse;
  } else if (id == "type-exemplar-0") {
    ex.note = "oval exemplar";
    ex.is_pair = true;
    ex.pair_shape = ShapeClass::oval;
  } else if (id == "type-exemplar-1") {
    ex.note = "loaf exemplar";
    ex.is_pair = true;
    ex.pair_shape = ShapeClass::loaf;
  } else if (id == "type-exemplar-2") {
    ex.note = "droplet exemplar";
    ex.is_pair = true;
    ex.pair_shape = ShapeClass::droplet;
  } else if (id == "type-exemplar-3") {
    ex.note = "triangle exemplar";
    ex.is_pair = true;
    ex.pair_shape = ShapeClass::triangle;
  }
  return ex;
}

}  // namespace fixtures
}  // namespace jnr
