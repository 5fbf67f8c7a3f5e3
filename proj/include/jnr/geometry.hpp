#pragma once

// Geometry of the joint numerical range W(A1,A2,A3) in R^3: the measurement
// map, support functions in the minimum-eigenvalue convention, exposed-face
// dimensions, and boundary sampling into a triangle mesh.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <span>
#include <sstream>
#include <vector>

#include "jnr/detail/search.hpp"
#include "jnr/hull3.hpp"
#include "jnr/linalg.hpp"
#include "jnr/settings.hpp"
#include "jnr/vec3.hpp"

namespace jnr {

// w(rho) = (tr rho A1, tr rho A2, tr rho A3).
inline Vec3 measure(const MatrixTriple& t, const DensityMatrix& rho) {
  return {frobenius_inner(rho.rho, t.a1), frobenius_inner(rho.rho, t.a2),
          frobenius_inner(rho.rho, t.a3)};
}

inline Vec3 measure_pure(const MatrixTriple& t, const CVec& psi) {
  return measure(t, DensityMatrix::pure(psi, t.dim()));
}

// Affine dimension of the exposed face spanned by states supported on an
// orthonormal eigenspace basis: the rank of the measurement map restricted to
// traceless hermitian perturbations inside that subspace.
inline int face_dimension(const MatrixTriple& t, std::span<const CVec> basis,
                          const Settings& cfg = Settings{}) {
  int r = static_cast<int>(basis.size());
  if (r <= 1) return 0;
  HermitianMatrix c1 = compress(t.a1, basis);
  HermitianMatrix c2 = compress(t.a2, basis);
  HermitianMatrix c3 = compress(t.a3, basis);
  std::vector<HermitianMatrix> tb = traceless_basis(r);
  // G is 3 x (r^2-1); its rank is computed from the 3x3 Gram matrix G G^T.
  int m = static_cast<int>(tb.size());
  std::vector<double> g(static_cast<size_t>(3 * m));
  for (int j = 0; j < m; ++j) {
    g[static_cast<size_t>(0 * m + j)] = frobenius_inner(c1, tb[static_cast<size_t>(j)]);
    g[static_cast<size_t>(1 * m + j)] = frobenius_inner(c2, tb[static_cast<size_t>(j)]);
    g[static_cast<size_t>(2 * m + j)] = frobenius_inner(c3, tb[static_cast<size_t>(j)]);
  }
  CMat gram(3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int j = 0; j < m; ++j)
        s += g[static_cast<size_t>(i * m + j)] * g[static_cast<size_t>(k * m + j)];
      gram.at(i, k) = s;
    }
  EigenDecomposition ed = hermitian_eig(HermitianMatrix::from(gram, 1e-6));
  double top = std::max(ed.values[2], 0.0);
  double thr = cfg.face_dim_rel_tol * std::max(std::sqrt(top), 1e-30);
  int rank = 0;
  for (int i = 0; i < 3; ++i)
    if (std::sqrt(std::max(ed.values[static_cast<size_t>(i)], 0.0)) > thr) ++rank;
  return std::min(rank, std::min(r * r - 1, 3));
}

// Support data of W in direction u, minimum convention:
// support_value = min_{x in W} <x,u> = lambda_min(u . A).
struct SupportResult {
  Direction direction{0, 0, 1};
  double support_value = 0.0;
  int multiplicity = 1;          // ground-eigenspace dimension at the cluster gap
  Vec3 point{0, 0, 0};           // image of one minimizing eigenstate
  int face_dim = 0;              // affine dimension of the exposed face
  std::vector<CVec> eigenbasis;  // orthonormal basis of the ground eigenspace
};

inline SupportResult support(const MatrixTriple& t, const Direction& u,
                             const Settings& cfg = Settings{}) {
  HermitianMatrix pen = t.pencil(u.u);
  EigenDecomposition ed = hermitian_eig(pen, cfg);
  int n = t.dim();
  double top = std::max(std::abs(ed.values[0]), std::abs(ed.values[static_cast<size_t>(n - 1)]));
  double gap = cfg.cluster_gap_tol * std::max(1.0, top);
  int mult = 1;
  while (mult < n && ed.values[static_cast<size_t>(mult)] - ed.values[0] <= gap) ++mult;

  SupportResult r;
  r.direction = u;
  r.support_value = ed.values[0];
  r.multiplicity = mult;
  for (int j = 0; j < mult; ++j) r.eigenbasis.push_back(ed.vectors.column(j));
  r.point = measure_pure(t, r.eigenbasis[0]);
  r.face_dim = face_dimension(t, r.eigenbasis, cfg);
  return r;
}

// One-dimensional piece of a face boundary, as endpoints in R^3.
struct Segment3 {
  Vec3 a{0, 0, 0};
  Vec3 b{0, 0, 0};
  double length() const { return dist(a, b); }
  Vec3 midpoint() const { return 0.5 * (a + b); }
};

// Boundary point cloud plus the convex-hull triangulation over it.
struct BoundaryMesh {
  std::vector<Vec3> vertices;                 // one support point per direction
  std::vector<std::array<int, 3>> triangles;  // hull facets, indices into vertices
  std::vector<int> hull_vertices;             // vertices that are hull corners
  bool degenerate = false;                    // affine dimension of W < 3
  int dim_estimate = 3;
};

inline BoundaryMesh sample_boundary(const MatrixTriple& t, int num_dirs, uint64_t seed,
                                    const Settings& cfg = Settings{}) {
  if (num_dirs < 4) throw std::invalid_argument("sample_boundary: need at least 4 directions");
  std::vector<Vec3> dirs = detail::fibonacci_sphere(num_dirs, seed);
  BoundaryMesh mesh;
  mesh.vertices.resize(static_cast<size_t>(num_dirs));
  detail::parallel_for(num_dirs, [&](int i) {
    HermitianMatrix pen = t.pencil(dirs[static_cast<size_t>(i)]);
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    mesh.vertices[static_cast<size_t>(i)] = measure_pure(t, ed.vectors.column(0));
  });

  Hull3 hull = convex_hull(mesh.vertices, cfg.hull_coplanar_rel);
  mesh.degenerate = hull.degenerate;
  mesh.dim_estimate = hull.dim_estimate;
  if (!hull.degenerate) {
    mesh.triangles.reserve(hull.faces.size());
    for (const HullFace& f : hull.faces) mesh.triangles.push_back({f.a, f.b, f.c});
    mesh.hull_vertices = hull.vertex_indices;
  }
  return mesh;
}

// Wavefront OBJ with 9 significant digits and LF line endings. Only vertices
// referenced by hull facets are written (reindexed, original order).
inline void write_obj(const BoundaryMesh& mesh, std::ostream& os) {
  std::vector<int> remap(mesh.vertices.size(), -1);
  int next = 1;  // OBJ indices are 1-based
  std::ostringstream vs, fs;
  vs.setf(std::ios::fmtflags(0), std::ios::floatfield);
  vs << std::setprecision(9);
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      int idx = tri[static_cast<size_t>(k)];
      if (remap[static_cast<size_t>(idx)] < 0) {
        remap[static_cast<size_t>(idx)] = next++;
        const Vec3& p = mesh.vertices[static_cast<size_t>(idx)];
        vs << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
      }
    }
    fs << "f " << remap[static_cast<size_t>(tri[0])] << " " << remap[static_cast<size_t>(tri[1])]
       << " " << remap[static_cast<size_t>(tri[2])] << "\n";
  }
  os << vs.str() << fs.str();
}

}  // namespace jnr
