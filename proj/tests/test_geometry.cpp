#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "jnr/fixtures.hpp"
#include "jnr/geometry.hpp"

using namespace jnr;

namespace {

MatrixTriple diag_triple() {
  // commuting triple: W is the convex hull of the four diagonal points
  double d1[] = {0.0, 1.0, 0.0, 2.0};
  double d2[] = {0.0, 0.0, 1.0, -1.0};
  double d3[] = {1.0, 0.0, 0.0, 3.0};
  return MatrixTriple(HermitianMatrix::diagonal(d1), HermitianMatrix::diagonal(d2),
                      HermitianMatrix::diagonal(d3));
}

}  // namespace

TEST_CASE("support uses the minimum eigenvalue convention", "[geometry]") {
  MatrixTriple t = diag_triple();
  SupportResult r = support(t, Direction(Vec3{0.0, 0.0, 1.0}));
  // min over diagonal entries of A3 is 0, attained twice
  REQUIRE(r.support_value == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(r.multiplicity == 2);
  SupportResult r2 = support(t, Direction(Vec3{-1.0, 0.0, 0.0}));
  REQUIRE(r2.support_value == Catch::Approx(-2.0).margin(1e-12));
  REQUIRE(r2.point[0] == Catch::Approx(2.0).margin(1e-10));
}

TEST_CASE("support point lies on the supporting plane", "[geometry]") {
  GalleryExample ex = fixtures::load("E5");
  for (const Vec3& raw : {Vec3{1, 2, 3}, Vec3{-1, 0.5, 0.2}, Vec3{0, -1, 1}}) {
    Direction d(raw);
    SupportResult r = support(ex.file.triple, d);
    REQUIRE(dot(d.u, r.point) == Catch::Approx(r.support_value).margin(1e-8));
  }
}

TEST_CASE("measuring a basis state reads off diagonal entries", "[geometry]") {
  MatrixTriple t = diag_triple();
  CVec e3{};
  e3[3] = 1.0;
  Vec3 p = measure_pure(t, e3);
  REQUIRE(p[0] == Catch::Approx(2.0));
  REQUIRE(p[1] == Catch::Approx(-1.0));
  REQUIRE(p[2] == Catch::Approx(3.0));
}

TEST_CASE("boundary sample of a commuting triple recovers the simplex hull", "[geometry]") {
  MatrixTriple t = diag_triple();
  BoundaryMesh mesh = sample_boundary(t, 300, 1);
  REQUIRE_FALSE(mesh.degenerate);
  REQUIRE(mesh.hull_vertices.size() == 4);
  // every sampled boundary point stays inside the exact simplex hull
  std::vector<Vec3> verts{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {2, -1, 3}};
  Hull3 exact = convex_hull(verts);
  for (const Vec3& p : mesh.vertices)
    for (const HullFace& f : exact.faces) REQUIRE(dot(f.unit_normal, p) <= f.offset + 1e-8);
}

TEST_CASE("too few directions is rejected", "[geometry]") {
  MatrixTriple t = diag_triple();
  REQUIRE_THROWS_AS(sample_boundary(t, 3, 1), std::invalid_argument);
}

TEST_CASE("OBJ export is one-based and references every kept vertex", "[geometry]") {
  GalleryExample ex = fixtures::load("E14");
  BoundaryMesh mesh = sample_boundary(ex.file.triple, 200, 1);
  std::ostringstream os;
  write_obj(mesh, os);
  std::istringstream is(os.str());
  std::string line;
  int nv = 0, nf = 0;
  std::vector<bool> used;
  while (std::getline(is, line)) {
    REQUIRE((line.rfind("v ", 0) == 0 || line.rfind("f ", 0) == 0));
    if (line[0] == 'v') {
      ++nv;
      used.push_back(false);
    } else {
      ++nf;
      std::istringstream fs(line.substr(2));
      int a = 0, b = 0, c = 0;
      fs >> a >> b >> c;
      for (int idx : {a, b, c}) {
        REQUIRE(idx >= 1);
        REQUIRE(idx <= nv);
        used[static_cast<size_t>(idx - 1)] = true;
      }
    }
  }
  REQUIRE(nv >= 4);
  REQUIRE(nf >= 4);
  for (bool u : used) REQUIRE(u);
}

TEST_CASE("segment helpers", "[geometry]") {
  Segment3 s{{0, 0, 0}, {2, 0, 0}};
  REQUIRE(s.length() == Catch::Approx(2.0));
  REQUIRE(s.midpoint()[0] == Catch::Approx(1.0));
}
