#include <catch2/catch_amalgamated.hpp>

#include "jnr/detect.hpp"
#include "jnr/fixtures.hpp"

using namespace jnr;

TEST_CASE("generic triple has no rank-one pencil tuples", "[detect]") {
  GalleryExample ex = fixtures::load("E0");
  TupleSearchReport rep = find_rank1_tuples(ex.file.triple, Settings{}, 1);
  REQUIRE(rep.tuples.empty());
  ClassSignature sig = classify_jnr(ex.file.triple);
  REQUIRE(sig.counts == std::array<int, 4>{0, 0, 0, 0});
  REQUIRE(sig.column == 0);
  REQUIRE_FALSE(sig.corner_implied);
}

TEST_CASE("loaf plus triangle example lands in its documented column", "[detect]") {
  GalleryExample ex = fixtures::load("E5");
  ClassSignature sig = classify_jnr(ex.file.triple);
  REQUIRE(sig.counts == std::array<int, 4>{0, 1, 0, 1});
  REQUIRE(sig.column == 5);
  REQUIRE(sig.faces.size() == 2);
}

TEST_CASE("single-triangle example implies no corner", "[detect]") {
  GalleryExample ex = fixtures::load("E12");
  ClassSignature sig = classify_jnr(ex.file.triple);
  REQUIRE(sig.counts == std::array<int, 4>{0, 0, 0, 1});
  REQUIRE(sig.column == 12);
  REQUIRE_FALSE(sig.corner_implied);
}

TEST_CASE("accepted tuples certify a rank-one pencil", "[detect]") {
  GalleryExample ex = fixtures::load("E13");
  const MatrixTriple& t = ex.file.triple;
  Settings cfg;
  TupleSearchReport rep = find_rank1_tuples(t, cfg, 1);
  REQUIRE(rep.tuples.size() == 2);
  double scale = t.scale();
  for (const RankOneTuple& tup : rep.tuples) {
    REQUIRE(tup.gap < cfg.tuple_accept_tol * scale);
    REQUIRE(tup.minor_residual < cfg.minor_tol);  // already scale-relative
    REQUIRE(tup.kernel_basis.size() == 3);
    // the shifted pencil annihilates every reported kernel vector
    HermitianMatrix pen = t.pencil(tup.u);
    CMat shifted = pen.mat() + tup.u0 * CMat::identity(t.dim());
    for (const CVec& k : tup.kernel_basis) {
      CVec r = shifted.apply(k);
      REQUIRE(cnorm(r, t.dim()) < 1e-6 * scale);
    }
  }
}

TEST_CASE("degenerate ranges are refused", "[detect]") {
  HermitianMatrix z(4);
  MatrixTriple zeros(z, z, z);
  REQUIRE_THROWS_AS(classify_jnr(zeros), DegenerateRangeError);

  // planar range: third matrix linearly dependent on the identity
  double d1[] = {0.0, 1.0, 2.0, 3.0};
  double d2[] = {1.0, -1.0, 0.5, 0.0};
  HermitianMatrix a1 = HermitianMatrix::diagonal(d1);
  HermitianMatrix a2(4);
  a2.set(0, 1, 1.0);
  a2.set(2, 3, cplx{0.0, 1.0});
  a2.set(0, 0, d2[0]);
  MatrixTriple flat(a1, a2, 0.0 * a1);
  REQUIRE_THROWS_AS(classify_jnr(flat), DegenerateRangeError);
}

TEST_CASE("face records carry supporting data", "[detect]") {
  GalleryExample ex = fixtures::load("E12");
  ClassSignature sig = classify_jnr(ex.file.triple);
  REQUIRE(sig.faces.size() == 1);
  const FaceRecord& f = sig.faces[0];
  REQUIRE(f.shape.tag == ShapeClass::triangle);
  // support value matches an independent minimum-eigenvalue evaluation
  Direction d(f.tuple.u);
  HermitianMatrix pen = ex.file.triple.pencil(d.u);
  EigenDecomposition ed = hermitian_eig(pen);
  REQUIRE(f.support_value == Catch::Approx(ed.values[0]).margin(1e-8));
}
