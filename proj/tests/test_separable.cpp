#include <catch2/catch_amalgamated.hpp>

#include "jnr/fixtures.hpp"
#include "jnr/separable.hpp"

using namespace jnr;

namespace {

HermitianMatrix bell_witness() {
  // identity minus twice the projector onto (|00> + |11>)/sqrt(2)
  HermitianMatrix h(4);
  h.set(1, 1, 1.0);
  h.set(2, 2, 1.0);
  h.set(0, 3, -1.0);
  return h;
}

}  // namespace

TEST_CASE("product minimum of the identity is one", "[separable]") {
  HermitianMatrix h = herm_identity(4);
  REQUIRE(seesaw_min(h).value == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(ppt_min(h).value == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("product-diagonal observable minimizes at a basis product state", "[separable]") {
  double d[] = {3.0, -1.0, 2.0, 4.0};  // all four basis states are products
  HermitianMatrix h = HermitianMatrix::diagonal(d);
  REQUIRE(seesaw_min(h).value == Catch::Approx(-1.0).margin(1e-9));
  REQUIRE(ppt_min(h).value == Catch::Approx(-1.0).margin(1e-5));
}

TEST_CASE("entanglement witness separates product states from the spectrum", "[separable]") {
  HermitianMatrix h = bell_witness();
  EigenDecomposition ed = hermitian_eig(h);
  REQUIRE(ed.values[0] == Catch::Approx(-1.0).margin(1e-12));
  // no product state reaches the entangled ground state
  REQUIRE(seesaw_min(h).value == Catch::Approx(0.0).margin(1e-9));
  REQUIRE(ppt_min(h).value == Catch::Approx(0.0).margin(1e-5));
}

TEST_CASE("separable support is sandwiched", "[separable]") {
  GalleryExample ex = fixtures::load("E7a");
  const MatrixTriple& t = ex.file.triple;
  Settings cfg;
  for (const Vec3& u : detail::fibonacci_sphere(6, 3)) {
    SepSupport s = sep_support(t, Direction(u), cfg, 1);
    REQUIRE(s.jnr_value <= s.ppt_value + 1e-7 * t.scale());
    REQUIRE(s.ppt_value <= s.product_value + 1e-6 * t.scale());
  }
}

TEST_CASE("separable range of a product-diagonal triple fills the range", "[separable]") {
  GalleryExample ex = fixtures::load("E14");
  SepSample s = sample_sep_boundary(ex.file.triple, 60, 1);
  for (size_t i = 0; i < s.dirs.size(); ++i)
    REQUIRE(std::abs(s.sep_values[i] - s.jnr_values[i]) < 1e-6);
}

TEST_CASE("tangency certificate on a flat face", "[separable]") {
  GalleryExample ex = fixtures::load("E14");
  // minimizing direction (1,1,1)/sqrt(3) exposes the facet opposite the vertex (1,1,1)
  TangencyResult r = tangency_check(ex.file.triple, Direction(Vec3{1, 1, 1}), Settings{}, 1);
  REQUIRE(r.tangent);
  REQUIRE(r.gap < 1e-7);
}
