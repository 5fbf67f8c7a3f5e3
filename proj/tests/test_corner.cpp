#include <catch2/catch_amalgamated.hpp>

#include "jnr/corners.hpp"
#include "jnr/fixtures.hpp"

using namespace jnr;

TEST_CASE("joint spectrum of commuting matrices is the diagonal set", "[corner]") {
  double d1[] = {0.0, 1.0, 0.0, 2.0};
  double d2[] = {0.0, 0.0, 1.0, -1.0};
  double d3[] = {1.0, 0.0, 0.0, 3.0};
  MatrixTriple t(HermitianMatrix::diagonal(d1), HermitianMatrix::diagonal(d2),
                 HermitianMatrix::diagonal(d3));
  std::vector<JointSpectrumPoint> pts = joint_spectrum(t);
  REQUIRE(pts.size() == 4);
  std::vector<Vec3> want{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {2, -1, 3}};
  for (const Vec3& w : want) {
    bool found = false;
    for (const JointSpectrumPoint& p : pts)
      if (dist(p.value, w) < 1e-9) found = true;
    REQUIRE(found);
  }
}

TEST_CASE("generic triple has an empty joint spectrum", "[corner]") {
  GalleryExample ex = fixtures::load("E0");
  REQUIRE(joint_spectrum(ex.file.triple).empty());
}

TEST_CASE("tetrahedron vertices are corners, face points are not", "[corner]") {
  GalleryExample ex = fixtures::load("E14");
  const MatrixTriple& t = ex.file.triple;
  CornerVerdict v = is_corner_point(t, Vec3{1, 1, 1});
  REQUIRE(v.is_corner);
  REQUIRE(v.cone_rank == 3);
  REQUIRE(v.hits >= 3);
  // centroid of a facet: boundary but smooth normal fan of rank 1
  Vec3 fc = (1.0 / 3.0) * (Vec3{1, 1, 1} + Vec3{1, -1, -1} + Vec3{-1, 1, -1});
  CornerVerdict w = is_corner_point(t, fc);
  REQUIRE_FALSE(w.is_corner);
}

TEST_CASE("smooth boundary points of an ovoid are never corners", "[corner]") {
  GalleryExample ex = fixtures::load("E0");
  const MatrixTriple& t = ex.file.triple;
  for (const Vec3& u : detail::fibonacci_sphere(8, 5)) {
    SupportResult r = support(t, Direction(u));
    CornerVerdict v = is_corner_point(t, r.point);
    REQUIRE_FALSE(v.is_corner);
  }
}

TEST_CASE("boundary margin signs", "[corner]") {
  GalleryExample ex = fixtures::load("E14");
  const MatrixTriple& t = ex.file.triple;
  REQUIRE(boundary_margin(t, Vec3{0, 0, 0}) > 0.1);        // deep inside
  REQUIRE(boundary_margin(t, Vec3{3, 3, 3}) < -0.1);       // far outside
  REQUIRE(std::abs(boundary_margin(t, Vec3{1, 1, 1})) < 1e-6);  // vertex
}

TEST_CASE("three segments meeting at a point certify a corner in order four", "[corner]") {
  GalleryExample ex = fixtures::load("E14");
  const MatrixTriple& t = ex.file.triple;
  Vec3 q{1, 1, 1};
  std::vector<Segment3> segs{{Vec3{1, -1, -1}, q}, {Vec3{-1, 1, -1}, q}, {Vec3{-1, -1, 1}, q}};
  ThreeSegmentCheck chk = check_three_segment_corner(t, q, segs);
  REQUIRE(chk.order_four);
  REQUIRE(chk.hypothesis_valid);
  REQUIRE(chk.verdict.is_corner);
}
