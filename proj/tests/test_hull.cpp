#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "jnr/hull3.hpp"

using namespace jnr;

TEST_CASE("hull of a cube with interior points", "[hull]") {
  std::vector<Vec3> pts;
  for (int s = 0; s < 8; ++s)
    pts.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0});
  pts.push_back({0.0, 0.0, 0.0});
  pts.push_back({0.5, 0.1, -0.2});
  Hull3 h = convex_hull(pts);
  REQUIRE_FALSE(h.degenerate);
  REQUIRE(h.vertex_indices.size() == 8);
  REQUIRE(h.faces.size() == 12);  // Euler: V - E + F = 2 with E = 3F/2
  for (const HullFace& f : h.faces)
    for (const Vec3& p : pts) REQUIRE(dot(f.unit_normal, p) <= f.offset + 1e-9);
}

TEST_CASE("hull facets are outward oriented", "[hull]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({u(rng), u(rng), u(rng)});
  Hull3 h = convex_hull(pts);
  REQUIRE_FALSE(h.degenerate);
  Vec3 centroid{0, 0, 0};
  for (const Vec3& p : pts) centroid = centroid + (1.0 / 60.0) * p;
  for (const HullFace& f : h.faces) {
    Vec3 n = cross(pts[static_cast<size_t>(f.b)] - pts[static_cast<size_t>(f.a)],
                   pts[static_cast<size_t>(f.c)] - pts[static_cast<size_t>(f.a)]);
    REQUIRE(dot(n, f.unit_normal) > 0.0);
    REQUIRE(dot(f.unit_normal, centroid) < f.offset);
  }
}

TEST_CASE("coplanar input is reported degenerate", "[hull]") {
  std::vector<Vec3> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.5, 0.25, 0}};
  Hull3 h = convex_hull(pts);
  REQUIRE(h.degenerate);
}

TEST_CASE("tetrahedron hull keeps only the four vertices", "[hull]") {
  std::vector<Vec3> pts{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (int i = 0; i < 18; ++i) {
    double w = 0.05 * (i + 1);  // stays strictly inside; (1,0,0) would sit on an edge
    pts.push_back({w, 0.0, 0.0});
  }
  Hull3 h = convex_hull(pts);
  REQUIRE_FALSE(h.degenerate);
  REQUIRE(h.vertex_indices == std::vector<int>{0, 1, 2, 3});
  REQUIRE(h.faces.size() == 4);
}
