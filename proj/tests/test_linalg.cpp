#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "jnr/linalg.hpp"

using namespace jnr;

namespace {

HermitianMatrix random_hermitian(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  HermitianMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      h.set(i, j, i == j ? cplx{g(rng), 0.0} : cplx{g(rng), g(rng)});
  return h;
}

}  // namespace

TEST_CASE("hermitian set keeps the mirror entry conjugate", "[linalg]") {
  HermitianMatrix h(3);
  h.set(0, 2, cplx{1.0, -2.0});
  REQUIRE(h.mat().at(2, 0) == cplx{1.0, 2.0});
  h.set(1, 1, cplx{4.0, 0.5});  // imaginary part of a diagonal entry is dropped
  REQUIRE(h.mat().at(1, 1) == cplx{4.0, 0.0});
}

TEST_CASE("from() rejects matrices that are not hermitian", "[linalg]") {
  CMat m(2);
  m.at(0, 1) = cplx{1.0, 0.0};
  m.at(1, 0) = cplx{0.5, 0.0};
  REQUIRE_THROWS_AS(HermitianMatrix::from(m), std::invalid_argument);
  m.at(1, 0) = cplx{1.0, 1e-12};  // tiny skew part is symmetrized away
  REQUIRE_NOTHROW(HermitianMatrix::from(m));
}

TEST_CASE("eigendecomposition of a 2x2 reflection", "[linalg]") {
  HermitianMatrix h(2);
  h.set(0, 1, cplx{1.0, 0.0});
  EigenDecomposition ed = hermitian_eig(h);
  REQUIRE(ed.values[0] == Catch::Approx(-1.0).margin(1e-12));
  REQUIRE(ed.values[1] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("eigenvalues of a diagonal matrix come back sorted", "[linalg]") {
  double d[] = {4.0, 1.0, 3.0, 2.0};
  EigenDecomposition ed = hermitian_eig(HermitianMatrix::diagonal(d));
  for (int i = 0; i < 4; ++i) REQUIRE(ed.values[i] == Catch::Approx(i + 1.0).margin(1e-12));
}

TEST_CASE("random hermitian matrices decompose accurately", "[linalg]") {
  for (int n = 2; n <= kMaxDim; ++n) {
    HermitianMatrix h = random_hermitian(n, 100 + static_cast<uint64_t>(n));
    EigenDecomposition ed = hermitian_eig(h);
    double scale = h.mat().fro_norm();
    for (int i = 0; i + 1 < n; ++i) REQUIRE(ed.values[i] <= ed.values[i + 1]);
    for (int i = 0; i < n; ++i) {
      CVec v = ed.vectors.column(i);
      CVec hv = h.mat().apply(v);
      double resid = 0.0;
      for (int r = 0; r < n; ++r) resid += std::norm(hv[r] - ed.values[i] * v[r]);
      REQUIRE(std::sqrt(resid) < 1e-10 * scale);
      for (int j = 0; j < i; ++j)
        REQUIRE(std::abs(cdot(ed.vectors.column(j), v, n)) < 1e-10);
      REQUIRE(std::abs(cnorm(v, n) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("pencil is the linear combination of the triple", "[linalg]") {
  HermitianMatrix a = random_hermitian(4, 7);
  HermitianMatrix b = random_hermitian(4, 8);
  HermitianMatrix c = random_hermitian(4, 9);
  MatrixTriple t(a, b, c);
  Vec3 u{0.3, -1.2, 2.0};
  CMat lhs = t.pencil(u).mat();
  CMat rhs = (0.3 * a + (-1.2) * b + 2.0 * c).mat();
  REQUIRE((lhs - rhs).max_abs() < 1e-14 * t.scale());
}

TEST_CASE("determinant and inverse agree on small systems", "[linalg]") {
  CMat m(3);
  m.at(0, 0) = 2.0; m.at(0, 1) = cplx{0.0, 1.0}; m.at(1, 0) = cplx{0.0, -1.0};
  m.at(1, 1) = 3.0; m.at(2, 2) = cplx{1.0, 1.0};
  cplx d = det(m);
  // block determinant: (2*3 - |i|^2) * (1+i) = 5 + 5i
  REQUIRE(std::abs(d - cplx{5.0, 5.0}) < 1e-12);
  CMat r = inverse(m) * m;
  REQUIRE((r - CMat::identity(3)).max_abs() < 1e-12);
}
