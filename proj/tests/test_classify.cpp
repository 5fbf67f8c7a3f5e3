#include <catch2/catch_amalgamated.hpp>

#include "jnr/classify.hpp"
#include "jnr/fixtures.hpp"

using namespace jnr;

namespace {

HermitianMatrix herm3(std::initializer_list<cplx> upper) {
  // row-major upper triangle: (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
  auto it = upper.begin();
  HermitianMatrix h(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) h.set(i, j, *it++);
  return h;
}

}  // namespace

TEST_CASE("curve type exemplars classify as documented", "[classify]") {
  struct Row {
    const char* id;
    ShapeClass want;
  } rows[] = {{"type-exemplar-0", ShapeClass::oval},
              {"type-exemplar-1", ShapeClass::loaf},
              {"type-exemplar-2", ShapeClass::droplet},
              {"type-exemplar-3", ShapeClass::triangle}};
  for (const Row& row : rows) {
    GalleryExample ex = fixtures::load(row.id);
    REQUIRE(ex.is_pair);
    ShapeClass got = classify_shape(ex.file.triple.a1, ex.file.triple.a2);
    INFO(row.id);
    REQUIRE(got == row.want);
  }
}

TEST_CASE("nilpotent jordan block has a circular disk range", "[classify]") {
  // numerical range of the 3x3 shift is the disk of radius cos(pi/4)
  HermitianMatrix re = herm3({0, 0.5, 0, 0, 0.5, 0});
  HermitianMatrix im = herm3({0, cplx{0, -0.5}, 0, 0, cplx{0, -0.5}, 0});
  ShapeDetails d = classify_shape_detailed(re, im);
  REQUIRE(d.tag == ShapeClass::ellipse);
  REQUIRE(d.ellipse.has_value());
  double r = std::cos(std::acos(-1.0) / 4.0);
  REQUIRE(d.ellipse->semi_major() == Catch::Approx(r).margin(1e-6));
  REQUIRE(d.ellipse->semi_minor() == Catch::Approx(r).margin(1e-6));
}

TEST_CASE("commuting pair with collinear spectrum is a segment", "[classify]") {
  double d1[] = {0.0, 1.0, 2.0};
  double d2[] = {0.0, 2.0, 4.0};
  ShapeClass got =
      classify_shape(HermitianMatrix::diagonal(std::span<const double>(d1, 3)),
                     HermitianMatrix::diagonal(std::span<const double>(d2, 3)));
  REQUIRE(got == ShapeClass::segment);
}

TEST_CASE("scalar pair is a point", "[classify]") {
  double d1[] = {2.0, 2.0, 2.0};
  double d2[] = {-1.0, -1.0, -1.0};
  ShapeClass got =
      classify_shape(HermitianMatrix::diagonal(std::span<const double>(d1, 3)),
                     HermitianMatrix::diagonal(std::span<const double>(d2, 3)));
  REQUIRE(got == ShapeClass::point);
}

TEST_CASE("droplet details expose the distinguished spectral point", "[classify]") {
  GalleryExample ex = fixtures::load("type-exemplar-2");
  ShapeDetails d = classify_shape_detailed(ex.file.triple.a1, ex.file.triple.a2);
  REQUIRE(d.tag == ShapeClass::droplet);
  REQUIRE(d.isolated_point.has_value());
  REQUIRE((*d.isolated_point)[0] == Catch::Approx(0.0).margin(1e-9));
  REQUIRE((*d.isolated_point)[1] == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(d.segments2d.size() == 2);  // two tangent segments from the split point
}

TEST_CASE("classification needs 3x3 input", "[classify]") {
  double d1[] = {0.0, 1.0};
  double d2[] = {1.0, 0.0};
  REQUIRE_THROWS_AS(classify_shape(HermitianMatrix::diagonal(std::span<const double>(d1, 2)),
                                   HermitianMatrix::diagonal(std::span<const double>(d2, 2))),
                    std::invalid_argument);
}
