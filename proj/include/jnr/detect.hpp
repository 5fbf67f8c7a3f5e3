#pragma once

// Boundary-structure detection for the joint numerical range of a hermitian
// triple: locates the rank-one pencil tuples behind flat faces, compresses
// each face to a planar pair, classifies shapes, counts them against the
// table of admissible configurations, runs the census of elliptic faces, and
// intersects flat faces pairwise.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jnr/classify.hpp"
#include "jnr/detail/search.hpp"
#include "jnr/geometry.hpp"
#include "jnr/hull3.hpp"
#include "jnr/linalg.hpp"
#include "jnr/settings.hpp"
#include "jnr/vec3.hpp"

namespace jnr {

struct DegenerateRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A direction whose shifted pencil u0 I + u . A is positive semidefinite of
// rank one. Stored with unit u; u0 = -lambda_min(u . A).
struct RankOneTuple {
  double u0 = 0.0;
  Vec3 u{0, 0, 1};
  double gap = 0.0;             // achieved spread of the bottom eigenvalues
  double minor_residual = 0.0;  // largest scale-relative principal minor
  std::vector<CVec> kernel_basis;
};

struct TupleSearchReport {
  std::vector<RankOneTuple> tuples;
  bool continuum_suspected = false;
  int starts_refined = 0;
};

// Certify that u is (numerically) a rank-one direction; fills the tuple on
// success. Checks the principal minors of orders two and three and the
// numerical rank of the shifted pencil.
inline bool certify_rank1(const MatrixTriple& t, const Vec3& u, const Settings& cfg,
                          RankOneTuple& out) {
  int n = t.dim();
  double scale = t.scale();
  HermitianMatrix pen = t.pencil(u);
  EigenDecomposition ed = hermitian_eig(pen, cfg);
  double gap = ed.values[static_cast<size_t>(n - 2)] - ed.values[0];
  if (gap >= cfg.tuple_accept_tol * scale) return false;
  double u0 = -ed.values[0];
  HermitianMatrix shifted = pen + u0 * herm_identity(n);

  double worst = 0.0;
  std::array<int, 3> idx{};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      idx = {i, j, 0};
      double m = principal_minor(shifted, std::span<const int>(idx.data(), 2));
      worst = std::max(worst, std::abs(m) / (scale * scale));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        idx = {i, j, k};
        double m = principal_minor(shifted, std::span<const int>(idx.data(), 3));
        worst = std::max(worst, std::abs(m) / (scale * scale * scale));
      }
  if (worst >= cfg.minor_tol) return false;
  if (numerical_rank(shifted, 1e-6) != 1) return false;

  out.u0 = u0;
  out.u = u;
  out.gap = gap;
  out.minor_residual = worst;
  out.kernel_basis.clear();
  for (int j = 0; j < n - 1; ++j) out.kernel_basis.push_back(ed.vectors.column(j));
  return out.kernel_basis.size() == static_cast<size_t>(n - 1);
}

// Two-phase search for all rank-one tuples: a dense spherical scan of the
// bottom-eigenvalue spread followed by simplex refinement of the best
// candidate starts. More than twenty accepted directions is taken as a sign
// of a ruled boundary (a continuum of flat directions) rather than the
// isolated faces this pipeline models.
inline TupleSearchReport find_rank1_tuples(const MatrixTriple& t, const Settings& cfg = Settings{},
                                           uint64_t seed = 1,
                                           std::vector<Event>* events = nullptr) {
  if (t.dim() < 3) throw std::invalid_argument("rank-one tuple search needs order >= 3");
  int n = t.dim();
  double scale = t.scale();
  auto g = [&](const Vec3& u) {
    HermitianMatrix pen = t.pencil(u);
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    return ed.values[static_cast<size_t>(n - 2)] - ed.values[0];
  };

  int scan_n = 4 * cfg.search_grid;
  std::vector<Vec3> dirs = detail::fibonacci_sphere(scan_n, seed);
  std::vector<double> vals(static_cast<size_t>(scan_n));
  detail::parallel_for(scan_n, [&](int i) { vals[static_cast<size_t>(i)] = g(dirs[static_cast<size_t>(i)]); });

  std::vector<int> order(static_cast<size_t>(scan_n));
  for (int i = 0; i < scan_n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return vals[static_cast<size_t>(a)] < vals[static_cast<size_t>(b)];
  });

  double spacing = std::sqrt(4.0 * M_PI / scan_n);
  int max_starts = std::max(8, cfg.search_grid / 4);
  std::vector<Vec3> starts;
  for (int rank = 0; rank < scan_n && static_cast<int>(starts.size()) < max_starts; ++rank) {
    const Vec3& cand = dirs[static_cast<size_t>(order[static_cast<size_t>(rank)])];
    bool close = false;
    for (const Vec3& s : starts)
      if (angle_between(s, cand) < 2.0 * spacing) {
        close = true;
        break;
      }
    if (!close) starts.push_back(cand);
  }

  std::vector<std::optional<RankOneTuple>> found(starts.size());
  detail::parallel_for(static_cast<int>(starts.size()), [&](int i) {
    detail::SphereMinResult r = detail::sphere_minimize(g, starts[static_cast<size_t>(i)],
                                                        spacing, cfg.nm_max_iter, 0.0);
    RankOneTuple tup;
    if (r.value < cfg.tuple_accept_tol * scale && certify_rank1(t, r.point, cfg, tup))
      found[static_cast<size_t>(i)] = std::move(tup);
  });

  TupleSearchReport rep;
  rep.starts_refined = static_cast<int>(starts.size());
  for (auto& f : found) {
    if (!f) continue;
    bool dup = false;
    for (RankOneTuple& kept : rep.tuples)
      if (angle_between(kept.u, f->u) < cfg.dedup_angle) {
        if (f->gap < kept.gap) kept = *f;
        dup = true;
        break;
      }
    if (!dup) rep.tuples.push_back(*f);
  }
  std::sort(rep.tuples.begin(), rep.tuples.end(), [](const RankOneTuple& a, const RankOneTuple& b) {
    if (a.u[0] != b.u[0]) return a.u[0] < b.u[0];
    if (a.u[1] != b.u[1]) return a.u[1] < b.u[1];
    return a.u[2] < b.u[2];
  });
  if (static_cast<int>(rep.tuples.size()) > 20) {
    rep.continuum_suspected = true;
    push_event(events, Event::Severity::warning, "tuple-continuum",
               "more than twenty rank-one directions accepted; boundary may carry a ruled "
               "family of flat faces");
  }
  return rep;
}

// Affine chart of a flat face: the compressions C_i of the triple to the face
// subspace decompose as C_i = origin_i I + frame1_i B1 + frame2_i B2 with
// (B1, B2) orthonormal traceless, so the face is the image of the planar
// range of (B1, B2) under y -> origin + y1 frame1 + y2 frame2.
struct PairCompression {
  HermitianMatrix b1{3};
  HermitianMatrix b2{3};
  Vec3 origin{0, 0, 0};
  Vec3 frame1{0, 0, 0};
  Vec3 frame2{0, 0, 0};
  int traceless_dim = 0;
};

inline Vec3 to_ambient(const PairCompression& pc, const Vec2& y) {
  return pc.origin + y[0] * pc.frame1 + y[1] * pc.frame2;
}

inline PairCompression compress_to_pair(const MatrixTriple& t, std::span<const CVec> basis) {
  int r = static_cast<int>(basis.size());
  if (r < 2 || r > t.dim()) throw std::invalid_argument("compress_to_pair: bad basis size");
  std::array<HermitianMatrix, 3> c{compress(t.a1, basis), compress(t.a2, basis),
                                   compress(t.a3, basis)};
  PairCompression pc;
  pc.b1 = HermitianMatrix(r);
  pc.b2 = HermitianMatrix(r);

  std::array<CMat, 3> d{CMat(r), CMat(r), CMat(r)};
  double dmax = 0.0;
  for (int i = 0; i < 3; ++i) {
    double alpha = std::real(c[static_cast<size_t>(i)].mat().trace()) / r;
    pc.origin[static_cast<size_t>(i)] = alpha;
    d[static_cast<size_t>(i)] = c[static_cast<size_t>(i)].mat() - alpha * CMat::identity(r);
    dmax = std::max(dmax, d[static_cast<size_t>(i)].fro_norm());
  }

  double thr = 1e-8 * std::max(1.0, dmax);
  std::vector<CMat> ortho;
  for (int i = 0; i < 3 && static_cast<int>(ortho.size()) < 2; ++i) {
    CMat w = d[static_cast<size_t>(i)];
    for (const CMat& prev : ortho) {
      double coef = 0.0;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) coef += std::real(std::conj(prev.at(a, b)) * w.at(a, b));
      w = w - cplx{coef, 0.0} * prev;
    }
    double nw = w.fro_norm();
    if (nw > thr) ortho.push_back((1.0 / nw) * w);
  }
  pc.traceless_dim = static_cast<int>(ortho.size());
  if (!ortho.empty()) pc.b1 = HermitianMatrix::from(ortho[0], 1e-6);
  if (ortho.size() > 1) pc.b2 = HermitianMatrix::from(ortho[1], 1e-6);

  for (int i = 0; i < 3; ++i) {
    pc.frame1[static_cast<size_t>(i)] = frobenius_inner(pc.b1, HermitianMatrix::from(d[static_cast<size_t>(i)], 1e-6));
    pc.frame2[static_cast<size_t>(i)] = ortho.size() > 1
        ? frobenius_inner(pc.b2, HermitianMatrix::from(d[static_cast<size_t>(i)], 1e-6))
        : 0.0;
  }
  return pc;
}

// One flat face produced by a rank-one tuple: its planar pair, its shape, and
// its one-dimensional boundary pieces mapped back to ambient coordinates.
struct FaceRecord {
  RankOneTuple tuple;
  PairCompression pair;
  ShapeDetails shape;
  double support_value = 0.0;  // min of u . x over the range; face plane offset
  std::vector<Segment3> segments;
};

inline FaceRecord build_face_record(const MatrixTriple& t, const RankOneTuple& tup,
                                    const Settings& cfg) {
  FaceRecord f;
  f.tuple = tup;
  f.support_value = -tup.u0;
  f.pair = compress_to_pair(t, tup.kernel_basis);
  if (f.pair.traceless_dim >= 2) {
    f.shape = classify_shape_detailed(f.pair.b1, f.pair.b2, cfg);
  } else if (f.pair.traceless_dim == 1) {
    f.shape.tag = ShapeClass::segment;
    EigenDecomposition ed = hermitian_eig(f.pair.b1, cfg);
    int r = f.pair.b1.dim();
    f.shape.segments2d = {{Vec2{ed.values[0], 0.0}, Vec2{ed.values[static_cast<size_t>(r - 1)], 0.0}}};
  } else {
    f.shape.tag = ShapeClass::point;
  }
  for (const auto& s : f.shape.segments2d)
    f.segments.push_back(Segment3{to_ambient(f.pair, s[0]), to_ambient(f.pair, s[1])});
  return f;
}

inline std::vector<FaceRecord> detect_nonelliptic_faces(const MatrixTriple& t,
                                                        const Settings& cfg = Settings{},
                                                        uint64_t seed = 1,
                                                        std::vector<Event>* events = nullptr,
                                                        TupleSearchReport* report_out = nullptr) {
  TupleSearchReport rep = find_rank1_tuples(t, cfg, seed, events);
  std::vector<FaceRecord> faces;
  for (const RankOneTuple& tup : rep.tuples) faces.push_back(build_face_record(t, tup, cfg));
  if (report_out) *report_out = std::move(rep);
  return faces;
}

// The admissible configurations of flat-face shapes: counts of
// (oval, loaf, droplet, triangle) faces. Configurations that force a corner
// point on the boundary are marked.
inline constexpr std::array<std::array<int, 4>, 15> kClassTable{{{0, 0, 0, 0},
                                                                 {1, 0, 0, 0},
                                                                 {0, 1, 0, 0},
                                                                 {0, 2, 0, 0},
                                                                 {0, 1, 1, 0},
                                                                 {0, 1, 0, 1},
                                                                 {0, 0, 1, 0},
                                                                 {0, 0, 2, 0},
                                                                 {0, 0, 3, 0},
                                                                 {0, 0, 1, 1},
                                                                 {0, 0, 1, 2},
                                                                 {0, 0, 2, 1},
                                                                 {0, 0, 0, 1},
                                                                 {0, 0, 0, 2},
                                                                 {0, 0, 0, 4}}};
inline constexpr std::array<bool, 15> kCornerImplied{false, false, false, false, false,
                                                     false, false, false, true,  true,
                                                     true,  true,  false, true,  true};

struct ClassSignature {
  std::array<int, 4> counts{};  // ovals, loaves, droplets, triangles
  int column = -1;              // index into kClassTable
  bool corner_implied = false;
  std::vector<FaceRecord> faces;       // the counted, non-elliptic flat faces
  std::vector<FaceRecord> other_flat;  // flat faces that are elliptic or degenerate
  bool continuum_suspected = false;
};

inline ClassSignature classify_jnr(const MatrixTriple& t, const Settings& cfg = Settings{},
                                   uint64_t seed = 1, std::vector<Event>* events = nullptr) {
  BoundaryMesh probe = sample_boundary(t, 200, seed, cfg);
  if (probe.degenerate || probe.dim_estimate < 3)
    throw DegenerateRangeError("joint numerical range is not full-dimensional");

  TupleSearchReport rep;
  std::vector<FaceRecord> all = detect_nonelliptic_faces(t, cfg, seed, events, &rep);
  ClassSignature sig;
  sig.continuum_suspected = rep.continuum_suspected;
  for (FaceRecord& f : all) {
    switch (f.shape.tag) {
      case ShapeClass::oval: sig.counts[0]++; sig.faces.push_back(std::move(f)); break;
      case ShapeClass::loaf: sig.counts[1]++; sig.faces.push_back(std::move(f)); break;
      case ShapeClass::droplet: sig.counts[2]++; sig.faces.push_back(std::move(f)); break;
      case ShapeClass::triangle: sig.counts[3]++; sig.faces.push_back(std::move(f)); break;
      default: sig.other_flat.push_back(std::move(f)); break;
    }
  }
  for (int c = 0; c < 15; ++c)
    if (kClassTable[static_cast<size_t>(c)] == sig.counts) {
      sig.column = c;
      sig.corner_implied = kCornerImplied[static_cast<size_t>(c)];
      break;
    }
  if (sig.column < 0) {
    push_event(events, Event::Severity::falsification, "admissible-configurations",
               "flat-face shape counts match no admissible configuration");
    throw ClassificationError("face shape counts match no admissible configuration");
  }
  return sig;
}

// A flat elliptic face exposed by a direction with a two-dimensional ground
// space. Semi-axis vectors live in ambient coordinates.
struct EllipticFace {
  Direction direction{0, 0, 1};
  double support_value = 0.0;
  Vec3 center{0, 0, 0};
  Vec3 axis1{0, 0, 0};
  Vec3 axis2{0, 0, 0};
  double fit_residual = 0.0;
  std::vector<CVec> kernel_basis;
};

namespace detail {

// Bloch decomposition of a hermitian 2x2: c = alpha I + v . sigma.
inline void bloch_split(const HermitianMatrix& c, double& alpha, Vec3& v) {
  alpha = 0.5 * std::real(c.at(0, 0) + c.at(1, 1));
  v = Vec3{std::real(c.at(0, 1)), -std::imag(c.at(0, 1)),
           0.5 * std::real(c.at(0, 0) - c.at(1, 1))};
}

}  // namespace detail

// Fit a general conic through planar points; returns the least-squares
// residual relative to the design scale (0 = exact conic).
inline double conic_fit_residual(const std::vector<Vec2>& pts) {
  size_t m = pts.size();
  if (m < 8) throw std::invalid_argument("conic fit needs at least 8 points");
  // columns: x^2, xy, y^2, x, y, 1; residual = smallest singular value of the
  // design matrix, via the smallest eigenvalue of its 6x6 normal matrix.
  std::array<std::array<double, 6>, 6> g{};
  double row_scale = 0.0;
  for (const Vec2& p : pts) {
    std::array<double, 6> row{p[0] * p[0], p[0] * p[1], p[1] * p[1], p[0], p[1], 1.0};
    double rn = 0.0;
    for (double v : row) rn += v * v;
    row_scale = std::max(row_scale, std::sqrt(rn));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g[static_cast<size_t>(i)][static_cast<size_t>(j)] += row[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
  }
  // 6x6 symmetric eigen via Jacobi on a CMat is capped at order 5, so run a
  // small dedicated cyclic Jacobi here.
  std::array<std::array<double, 6>, 6> a = g;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) off += a[static_cast<size_t>(p)][static_cast<size_t>(q)] * a[static_cast<size_t>(p)][static_cast<size_t>(q)];
    if (off < 1e-28 * row_scale * row_scale * row_scale * row_scale) break;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) {
        double apq = a[static_cast<size_t>(p)][static_cast<size_t>(q)];
        if (std::abs(apq) < 1e-300) continue;
        double tau = (a[static_cast<size_t>(q)][static_cast<size_t>(q)] - a[static_cast<size_t>(p)][static_cast<size_t>(p)]) / (2.0 * apq);
        double tt = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double cc = 1.0 / std::sqrt(1.0 + tt * tt), ss = tt * cc;
        for (int k = 0; k < 6; ++k) {
          double akp = a[static_cast<size_t>(k)][static_cast<size_t>(p)], akq = a[static_cast<size_t>(k)][static_cast<size_t>(q)];
          a[static_cast<size_t>(k)][static_cast<size_t>(p)] = cc * akp - ss * akq;
          a[static_cast<size_t>(k)][static_cast<size_t>(q)] = ss * akp + cc * akq;
        }
        for (int k = 0; k < 6; ++k) {
          double apk = a[static_cast<size_t>(p)][static_cast<size_t>(k)], aqk = a[static_cast<size_t>(q)][static_cast<size_t>(k)];
          a[static_cast<size_t>(p)][static_cast<size_t>(k)] = cc * apk - ss * aqk;
          a[static_cast<size_t>(q)][static_cast<size_t>(k)] = ss * apk + cc * aqk;
        }
      }
  }
  double lam_min = a[0][0];
  for (int i = 1; i < 6; ++i) lam_min = std::min(lam_min, a[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  return std::sqrt(std::max(lam_min, 0.0)) / std::max(row_scale, 1e-300);
}

// Census of elliptic flat faces: spherical scan of the gap between the two
// lowest pencil eigenvalues, refinement, and filtering to directions whose
// ground space is exactly two-dimensional with a two-dimensional image.
// Directions near rank-one tuples are excluded; faces are deduplicated by
// their supporting plane. Each face is validated by fitting a conic through
// boundary points of the compressed two-level range.
inline std::vector<EllipticFace> elliptic_census(const MatrixTriple& t,
                                                 std::span<const RankOneTuple> tuples,
                                                 const Settings& cfg = Settings{},
                                                 uint64_t seed = 1,
                                                 std::vector<Event>* events = nullptr) {
  int n = t.dim();
  double scale = t.scale();
  auto f2 = [&](const Vec3& u) {
    HermitianMatrix pen = t.pencil(u);
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    return ed.values[1] - ed.values[0];
  };

  int scan_n = 4 * cfg.search_grid;
  std::vector<Vec3> dirs = detail::fibonacci_sphere(scan_n, seed);
  std::vector<double> vals(static_cast<size_t>(scan_n));
  detail::parallel_for(scan_n, [&](int i) { vals[static_cast<size_t>(i)] = f2(dirs[static_cast<size_t>(i)]); });

  std::vector<int> order(static_cast<size_t>(scan_n));
  for (int i = 0; i < scan_n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return vals[static_cast<size_t>(a)] < vals[static_cast<size_t>(b)];
  });

  double spacing = std::sqrt(4.0 * M_PI / scan_n);
  int max_starts = std::max(8, cfg.search_grid / 4);
  std::vector<Vec3> starts;
  for (int rank = 0; rank < scan_n && static_cast<int>(starts.size()) < max_starts; ++rank) {
    const Vec3& cand = dirs[static_cast<size_t>(order[static_cast<size_t>(rank)])];
    if (vals[static_cast<size_t>(order[static_cast<size_t>(rank)])] > 0.25 * scale) break;
    bool close = false;
    for (const Vec3& s : starts)
      if (angle_between(s, cand) < 2.0 * spacing) {
        close = true;
        break;
      }
    if (!close) starts.push_back(cand);
  }

  std::vector<std::optional<EllipticFace>> found(starts.size());
  detail::parallel_for(static_cast<int>(starts.size()), [&](int i) {
    detail::SphereMinResult r = detail::sphere_minimize(f2, starts[static_cast<size_t>(i)],
                                                        spacing, cfg.nm_max_iter, 0.0);
    if (r.value >= cfg.tuple_accept_tol * scale) return;
    for (const RankOneTuple& tup : tuples)
      if (angle_between(tup.u, r.point) < 1e-3) return;
    SupportResult sup = support(t, Direction(r.point), cfg);
    if (sup.multiplicity != 2 || sup.face_dim != 2) return;

    // face geometry from the Bloch map of the compressed pair
    std::array<HermitianMatrix, 3> c{compress(t.a1, sup.eigenbasis), compress(t.a2, sup.eigenbasis),
                                     compress(t.a3, sup.eigenbasis)};
    Vec3 alpha;
    std::array<Vec3, 3> rows;
    for (int k = 0; k < 3; ++k)
      detail::bloch_split(c[static_cast<size_t>(k)], alpha[static_cast<size_t>(k)], rows[static_cast<size_t>(k)]);

    // top two right singular directions of the 3x3 map n -> (rows . n)
    CMat m3(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += rows[static_cast<size_t>(k)][static_cast<size_t>(a)] * rows[static_cast<size_t>(k)][static_cast<size_t>(b)];
        m3.at(a, b) = s;
      }
    EigenDecomposition sv = hermitian_eig(HermitianMatrix::from(m3, 1e-6));
    auto col_real = [&](int j) {
      CVec v = sv.vectors.column(j);
      return Vec3{std::real(v[0]), std::real(v[1]), std::real(v[2])};
    };
    Vec3 w1 = col_real(2), w2 = col_real(1);
    auto image = [&](const Vec3& nvec) {
      return alpha + Vec3{dot(rows[0], nvec), dot(rows[1], nvec), dot(rows[2], nvec)};
    };
    EllipticFace face;
    face.direction = Direction(r.point);
    face.support_value = sup.support_value;
    face.center = alpha;
    face.axis1 = image(w1) - alpha;
    face.axis2 = image(w2) - alpha;
    face.kernel_basis = sup.eigenbasis;

    // independent check: boundary states of the compressed pencil trace a conic
    Vec3 e1 = normalized(face.axis1);
    Vec3 e2 = face.axis2 - dot(face.axis2, e1) * e1;
    if (norm(e2) < 1e-12 * scale) return;  // segment, not an ellipse
    e2 = normalized(e2);
    std::vector<Vec2> pts;
    for (int k = 0; k < 16; ++k) {
      double phi = 2.0 * M_PI * k / 16.0;
      Vec3 vdir = std::cos(phi) * e1 + std::sin(phi) * e2;
      CMat mixed(2);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          mixed.at(a, b) = vdir[0] * c[0].at(a, b) + vdir[1] * c[1].at(a, b) + vdir[2] * c[2].at(a, b);
      EigenDecomposition pe = hermitian_eig(HermitianMatrix::from(mixed, 1e-6), cfg);
      CVec ground = pe.vectors.column(0);
      Vec3 x{std::real(cdot(ground, c[0].mat().apply(ground), 2)),
             std::real(cdot(ground, c[1].mat().apply(ground), 2)),
             std::real(cdot(ground, c[2].mat().apply(ground), 2))};
      pts.push_back(Vec2{dot(x - alpha, e1), dot(x - alpha, e2)});
    }
    face.fit_residual = conic_fit_residual(pts);
    if (face.fit_residual > cfg.ellipse_fit_tol) return;
    found[static_cast<size_t>(i)] = std::move(face);
  });

  std::vector<EllipticFace> out;
  for (auto& f : found) {
    if (!f) continue;
    bool dup = false;
    for (const EllipticFace& kept : out) {
      double ang = angle_between(kept.direction.u, f->direction.u);
      if (ang < 1e-3 ||
          (dist(kept.center, f->center) < 1e-5 * std::max(1.0, scale) && ang < 0.1)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(*f));
  }
  std::sort(out.begin(), out.end(), [](const EllipticFace& a, const EllipticFace& b) {
    if (a.direction.u[0] != b.direction.u[0]) return a.direction.u[0] < b.direction.u[0];
    if (a.direction.u[1] != b.direction.u[1]) return a.direction.u[1] < b.direction.u[1];
    return a.direction.u[2] < b.direction.u[2];
  });
  if (events && (out.size() % 2) != 0)
    push_event(events, Event::Severity::warning, "elliptic-parity",
               "odd number of elliptic faces detected; census may have missed one");
  return out;
}

// Intersection of two flat faces, via the overlap of their state subspaces:
// eigenvalues of the summed projectors near two span the common subspace.
struct FaceIntersection {
  int dim = -1;  // -1 empty, 0 point, 1 segment, 2 unexpected planar overlap
  Vec3 point{0, 0, 0};
  Segment3 segment;
  bool exposed = false;        // certified exposed by the bisector direction
  Direction witness{0, 0, 1};  // direction used for the certificate
};

inline FaceIntersection face_intersection(const MatrixTriple& t, const FaceRecord& fa,
                                          const FaceRecord& fb, const Settings& cfg = Settings{}) {
  int n = t.dim();
  CMat s(n);
  for (const FaceRecord* f : {&fa, &fb})
    for (const CVec& v : f->tuple.kernel_basis)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s.at(i, j) += v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
  EigenDecomposition ed = hermitian_eig(HermitianMatrix::from(s, 1e-6), cfg);

  std::vector<CVec> common;
  for (int j = 0; j < n; ++j)
    if (ed.values[static_cast<size_t>(j)] > 2.0 - 1e-6) common.push_back(ed.vectors.column(j));

  FaceIntersection out;
  if (common.empty()) {
    out.dim = -1;
    return out;
  }
  if (common.size() == 1) {
    out.dim = 0;
    out.point = measure_pure(t, common[0]);
    return out;
  }
  if (common.size() >= 3) {
    out.dim = 2;
    return out;
  }

  std::array<HermitianMatrix, 3> c{compress(t.a1, common), compress(t.a2, common),
                                   compress(t.a3, common)};
  Vec3 alpha;
  std::array<Vec3, 3> rows;
  for (int k = 0; k < 3; ++k)
    detail::bloch_split(c[static_cast<size_t>(k)], alpha[static_cast<size_t>(k)], rows[static_cast<size_t>(k)]);
  Vec3 dirn = rows[0];
  for (const Vec3& r : {rows[1], rows[2]})
    if (norm(r) > norm(dirn)) dirn = r;
  double nd = norm(dirn);
  if (nd < 1e-10 * t.scale()) {
    out.dim = 0;
    out.point = alpha;
    return out;
  }
  Vec3 unit = (1.0 / nd) * dirn;
  Vec3 delta{dot(rows[0], unit), dot(rows[1], unit), dot(rows[2], unit)};
  out.dim = 1;
  out.segment = Segment3{alpha - delta, alpha + delta};

  // certificate: the bisector of the two face normals should expose exactly
  // this segment
  Vec3 bis = fa.tuple.u + fb.tuple.u;
  if (norm(bis) > 1e-8) {
    Direction w(bis);
    out.witness = w;
    SupportResult sup = support(t, w, cfg);
    double tol = cfg.corner_support_tol * t.scale();
    bool plane_ok = std::abs(dot(w.u, out.segment.a) - sup.support_value) < tol &&
                    std::abs(dot(w.u, out.segment.b) - sup.support_value) < tol;
    bool shape_ok = sup.face_dim <= 1;
    out.exposed = plane_ok && shape_ok;
  }
  return out;
}

}  // namespace jnr
