#pragma once

// Shape classification of planar numerical ranges W(B1,B2) of hermitian 3x3
// pairs, in the coordinates (tr rho B1, tr rho B2): decides among
// oval / loaf / droplet / triangle for proper shapes and
// ellipse / segment / point for the elliptic and degenerate ones, and maps a
// 4x4 triple to its class signature (counts of non-elliptic face shapes).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jnr/linalg.hpp"
#include "jnr/settings.hpp"
#include "jnr/vec3.hpp"

namespace jnr {

enum class ShapeClass { oval, loaf, droplet, triangle, ellipse, segment, point };

inline const char* shape_name(ShapeClass s) {
  switch (s) {
    case ShapeClass::oval: return "oval";
    case ShapeClass::loaf: return "loaf";
    case ShapeClass::droplet: return "droplet";
    case ShapeClass::triangle: return "triangle";
    case ShapeClass::ellipse: return "ellipse";
    case ShapeClass::segment: return "segment";
    case ShapeClass::point: return "point";
  }
  return "?";
}

// Filled ellipse in the plane: center plus orthogonal semi-axis vectors,
// |axis1| >= |axis2| > 0.
struct Ellipse2 {
  Vec2 center{0, 0};
  Vec2 axis1{1, 0};
  Vec2 axis2{0, 1};

  double semi_major() const { return norm2(axis1); }
  double semi_minor() const { return norm2(axis2); }

  // Coordinates in the unit-circle chart of the ellipse.
  Vec2 to_circle(const Vec2& p) const {
    double a = semi_major(), b = semi_minor();
    Vec2 d = p - center;
    Vec2 e1 = (1.0 / a) * axis1, e2 = (1.0 / b) * axis2;
    return {dot2(d, e1) / a, dot2(d, e2) / b};
  }
  Vec2 from_circle(const Vec2& t) const { return center + t[0] * axis1 + t[1] * axis2; }

  // Signed location: < 1 inside, == 1 on the boundary, > 1 outside.
  double location(const Vec2& p) const { return norm2(to_circle(p)); }

  Vec2 boundary_point(double theta) const {
    return center + std::cos(theta) * axis1 + std::sin(theta) * axis2;
  }
};

// Tangent points on the ellipse boundary seen from an exterior point.
inline std::array<Vec2, 2> ellipse_tangent_points(const Ellipse2& e, const Vec2& exterior) {
  Vec2 v = e.to_circle(exterior);
  double d = norm2(v);
  if (d <= 1.0) throw std::invalid_argument("tangent points need an exterior point");
  double alpha = std::acos(1.0 / d);
  Vec2 dir{v[0] / d, v[1] / d};
  double ca = std::cos(alpha), sa = std::sin(alpha);
  Vec2 t1{dir[0] * ca - dir[1] * sa, dir[0] * sa + dir[1] * ca};
  Vec2 t2{dir[0] * ca + dir[1] * sa, -dir[0] * sa + dir[1] * ca};
  return {e.from_circle(t1), e.from_circle(t2)};
}

// Roots of x^3 + a2 x^2 + a1 x + a0 (complex coefficients), Newton-polished,
// sorted by real then imaginary part.
inline std::array<cplx, 3> cubic_roots(cplx a2, cplx a1, cplx a0) {
  std::array<cplx, 3> roots;
  cplx shift = a2 / 3.0;
  cplx p = a1 - a2 * a2 / 3.0;
  cplx q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  double scale = std::max({std::abs(p), std::abs(q), 1e-300});
  if (std::abs(p) < 1e-14 * scale && std::abs(q) < 1e-14 * scale) {
    roots = {-shift, -shift, -shift};
  } else {
    cplx s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cplx u3 = (std::abs(-q / 2.0 + s) >= std::abs(-q / 2.0 - s)) ? -q / 2.0 + s : -q / 2.0 - s;
    cplx u = std::exp(std::log(u3) / 3.0);
    const cplx omega{-0.5, std::sqrt(3.0) / 2.0};
    for (int k = 0; k < 3; ++k) {
      cplx uk = u * std::pow(omega, k);
      roots[static_cast<size_t>(k)] = uk - p / (3.0 * uk) - shift;
    }
  }
  auto f = [&](cplx x) { return ((x + a2) * x + a1) * x + a0; };
  auto fp = [&](cplx x) { return (3.0 * x + 2.0 * a2) * x + a1; };
  for (auto& r : roots)
    for (int it = 0; it < 3; ++it) {
      cplx d = fp(r);
      if (std::abs(d) < 1e-30) break;
      r -= f(r) / d;
    }
  std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
    if (std::real(x) != std::real(y)) return std::real(x) < std::real(y);
    return std::imag(x) < std::imag(y);
  });
  return roots;
}

inline std::array<cplx, 3> eigenvalues_3x3(const CMat& b) {
  if (b.dim() != 3) throw std::invalid_argument("eigenvalues_3x3: order must be 3");
  cplx tr = b.trace();
  cplx c2 = 0.0;  // sum of principal 2x2 minors
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) c2 += b.at(i, i) * b.at(j, j) - b.at(i, j) * b.at(j, i);
  return cubic_roots(-tr, c2, -det(b));
}

// Gram matrix S of low-order commutators; positive definite exactly when the
// pair generates the full matrix algebra (no common invariant subspace).
inline HermitianMatrix irreducibility_gram(const HermitianMatrix& b1, const HermitianMatrix& b2) {
  if (b1.dim() != b2.dim()) throw std::invalid_argument("pair order mismatch");
  const CMat& x = b1.mat();
  const CMat& y = b2.mat();
  CMat x2 = x * x, y2 = y * y;
  CMat s(b1.dim());
  const std::array<std::pair<const CMat*, const CMat*>, 4> pairs{
      {{&x, &y}, {&x2, &y}, {&x, &y2}, {&x2, &y2}}};
  for (const auto& [a, b] : pairs) {
    CMat c = (*a) * (*b) - (*b) * (*a);
    s = s + c.adjoint() * c;
  }
  return HermitianMatrix::from(s, 1e-6);
}

inline bool is_unitarily_irreducible(const HermitianMatrix& b1, const HermitianMatrix& b2,
                                     const Settings& cfg = Settings{},
                                     bool* borderline = nullptr) {
  HermitianMatrix s = irreducibility_gram(b1, b2);
  double sn = std::max(s.fro_norm(), 1e-300);
  if (borderline) *borderline = false;
  bool positive = true;
  double power = 1.0;
  for (int k = 1; k <= s.dim(); ++k) {
    power *= sn;
    std::array<int, 5> idx{};
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    double minor = principal_minor(s, std::span<const int>(idx.data(), static_cast<size_t>(k)));
    double thr = cfg.irreducibility_tol * power;
    if (minor <= thr) positive = false;
    if (borderline && minor > 0.1 * thr && minor < 10.0 * thr) *borderline = true;
  }
  return positive;
}

// Vectors that are simultaneously eigenvectors of both matrices, found by
// intersecting eigenspace structures and verified by residuals.
inline std::vector<CVec> common_eigenvectors(const HermitianMatrix& b1, const HermitianMatrix& b2,
                                             const Settings& cfg = Settings{}) {
  int n = b1.dim();
  double s1 = std::max(1.0, spectral_norm(b1));
  double s2 = std::max(1.0, spectral_norm(b2));
  EigenDecomposition e1 = hermitian_eig(b1, cfg);
  double gap = cfg.cluster_gap_tol * s1;

  std::vector<CVec> candidates;
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && e1.values[static_cast<size_t>(stop)] - e1.values[static_cast<size_t>(stop - 1)] <= gap) ++stop;
    int d = stop - start;
    if (d == 1) {
      candidates.push_back(e1.vectors.column(start));
    } else {
      std::vector<CVec> basis;
      for (int j = start; j < stop; ++j) basis.push_back(e1.vectors.column(j));
      HermitianMatrix c2 = compress(b2, basis);
      EigenDecomposition e2 = hermitian_eig(c2, cfg);
      for (int j = 0; j < d; ++j) {
        CVec lifted{};
        for (int i = 0; i < n; ++i) {
          cplx s = 0.0;
          for (int k = 0; k < d; ++k)
            s += basis[static_cast<size_t>(k)][static_cast<size_t>(i)] * e2.vectors.at(k, j);
          lifted[static_cast<size_t>(i)] = s;
        }
        candidates.push_back(lifted);
      }
    }
    start = stop;
  }

  std::vector<CVec> out;
  for (const CVec& v : candidates) {
    bool ok = true;
    for (const HermitianMatrix* m : {&b1, &b2}) {
      CVec mv = m->mat().apply(v);
      cplx lam = cdot(v, mv, n);
      double res = 0.0;
      for (int i = 0; i < n; ++i) res += std::norm(mv[static_cast<size_t>(i)] - lam * v[static_cast<size_t>(i)]);
      if (std::sqrt(res) > 1e-8 * (m == &b1 ? s1 : s2)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

// Ellipse (possibly degenerate) of the 2x2 numerical range in pair coords.
struct Range2x2 {
  bool is_segment = false;
  Ellipse2 ellipse;
  std::array<Vec2, 2> segment_endpoints{};
};

inline Range2x2 range_of_2x2(const HermitianMatrix& c1, const HermitianMatrix& c2,
                             double degenerate_tol = 1e-10) {
  if (c1.dim() != 2) throw std::invalid_argument("range_of_2x2: order must be 2");
  CMat b = c1.mat() + cplx{0.0, 1.0} * c2.mat();
  cplx tr = b.trace();
  cplx dsc = std::sqrt(tr * tr - 4.0 * det(b));
  cplx mu1 = (tr - dsc) / 2.0, mu2 = (tr + dsc) / 2.0;
  double tr_bb = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) tr_bb += std::norm(b.at(i, j));
  double minor2 = tr_bb - std::norm(mu1) - std::norm(mu2);
  double scale = std::max(1.0, std::sqrt(tr_bb));
  Range2x2 r;
  Vec2 p1{std::real(mu1), std::imag(mu1)}, p2{std::real(mu2), std::imag(mu2)};
  if (minor2 <= degenerate_tol * scale * scale) {
    r.is_segment = true;
    r.segment_endpoints = {p1, p2};
    return r;
  }
  double bmin = 0.5 * std::sqrt(std::max(minor2, 0.0));
  Vec2 center = 0.5 * (p1 + p2);
  Vec2 foc = 0.5 * (p2 - p1);
  double f = norm2(foc);
  double amaj = std::hypot(bmin, f);
  Vec2 dir = (f > 1e-14 * scale) ? (1.0 / f) * foc : Vec2{1.0, 0.0};
  r.ellipse.center = center;
  r.ellipse.axis1 = amaj * dir;
  r.ellipse.axis2 = bmin * Vec2{-dir[1], dir[0]};
  return r;
}

// Everything classification produces beyond the bare tag. 2D data lives in
// pair coordinates (tr rho B1, tr rho B2).
struct ShapeDetails {
  ShapeClass tag = ShapeClass::oval;
  std::optional<Ellipse2> ellipse;
  std::optional<Vec2> isolated_point;              // split-off eigenvalue (reducible case)
  std::vector<Vec2> eigen_points;                  // normal case: joint eigenvalues
  std::vector<std::array<Vec2, 2>> segments2d;     // 1-dim boundary faces
  std::optional<std::array<double, 3>> loaf_tuple; // (u0, u1, u2), rank-one combination
  bool borderline_irreducibility = false;
  bool boundary_case = false;  // split-off point lies on the ellipse boundary
};

// Elliptic-range criterion for unitarily irreducible B = B1 + i B2: the
// deficiency delta = tr(B*B) - sum |lambda_i|^2 is positive, and the derived
// value tr B + (sum |lambda_i|^2 lambda_i - tr(B*B^2)) / delta must coincide
// with an eigenvalue; the range is then the ellipse with foci at the other
// two eigenvalues and minor axis length sqrt(delta).
inline std::optional<Ellipse2> ellipse_test(const HermitianMatrix& b1, const HermitianMatrix& b2,
                                            const Settings& cfg = Settings{}) {
  if (b1.dim() != 3) throw std::invalid_argument("ellipse_test: order must be 3");
  CMat b = b1.mat() + cplx{0.0, 1.0} * b2.mat();
  std::array<cplx, 3> lam = eigenvalues_3x3(b);
  CMat bb = b.adjoint() * b;
  double tr_bb = std::real(bb.trace());
  double sum2 = std::norm(lam[0]) + std::norm(lam[1]) + std::norm(lam[2]);
  double scale = std::max(1.0, std::sqrt(tr_bb));
  double delta = tr_bb - sum2;
  if (delta <= 1e-12 * scale * scale) return std::nullopt;

  cplx s3 = std::norm(lam[0]) * lam[0] + std::norm(lam[1]) * lam[1] + std::norm(lam[2]) * lam[2];
  cplx tr_bb2 = (bb * b).trace();
  cplx value = b.trace() + (s3 - tr_bb2) / delta;

  int match = -1;
  double best = cfg.ellipse_eig_match_tol * scale;
  for (int i = 0; i < 3; ++i) {
    double d = std::abs(value - lam[static_cast<size_t>(i)]);
    if (d < best) {
      best = d;
      match = i;
    }
  }
  if (match < 0) return std::nullopt;

  std::array<cplx, 2> foci{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != match) foci[static_cast<size_t>(k++)] = lam[static_cast<size_t>(i)];
  Vec2 f1{std::real(foci[0]), std::imag(foci[0])}, f2{std::real(foci[1]), std::imag(foci[1])};
  Vec2 center = 0.5 * (f1 + f2);
  Vec2 foc = 0.5 * (f2 - f1);
  double fd = norm2(foc);
  double bmin = 0.5 * std::sqrt(delta);
  double amaj = std::hypot(bmin, fd);
  Vec2 dir = (fd > 1e-14 * scale) ? (1.0 / fd) * foc : Vec2{1.0, 0.0};
  Ellipse2 e;
  e.center = center;
  e.axis1 = amaj * dir;
  e.axis2 = bmin * Vec2{-dir[1], dir[0]};
  return e;
}

namespace detail {

// Segment endpoints of the image of a 2-dim state space under the pair map,
// from the Bloch-sphere parametrization of its density matrices.
inline std::array<Vec2, 2> pair_image_segment(const HermitianMatrix& c1, const HermitianMatrix& c2) {
  auto bloch = [](const HermitianMatrix& c) {
    // c = alpha I + b . sigma
    double alpha = 0.5 * std::real(c.at(0, 0) + c.at(1, 1));
    Vec3 b{std::real(c.at(0, 1)), -std::imag(c.at(0, 1)),
           0.5 * std::real(c.at(0, 0) - c.at(1, 1))};
    return std::pair<double, Vec3>(alpha, b);
  };
  auto [a1, v1] = bloch(c1);
  auto [a2, v2] = bloch(c2);
  // linear part n -> (v1.n, v2.n) over |n| <= 1 has rank <= 1 for a segment
  Vec3 dir = (norm(v1) >= norm(v2)) ? v1 : v2;
  double nd = norm(dir);
  Vec2 base{a1, a2};
  if (nd < 1e-300) return {base, base};
  Vec3 unit = (1.0 / nd) * dir;
  Vec2 delta{dot(v1, unit), dot(v2, unit)};
  return {base - delta, base + delta};
}

}  // namespace detail

// Searches the unit circle of real combinations u1 B1 + u2 B2 for a rank-one
// point u0 I + u1 B1 + u2 B2 (PSD, ground eigenvalue of multiplicity two),
// certifying candidates by principal minors. Presence of such a combination
// separates the loaf from the oval among non-elliptic irreducible pairs.
inline bool loaf_test(const HermitianMatrix& b1, const HermitianMatrix& b2,
                      const Settings& cfg = Settings{},
                      std::array<double, 3>* tuple_out = nullptr,
                      std::array<Vec2, 2>* segment_out = nullptr) {
  if (b1.dim() != 3) throw std::invalid_argument("loaf_test: order must be 3");
  double scale = std::max({1.0, spectral_norm(b1), spectral_norm(b2)});

  auto gap = [&](double theta) {
    HermitianMatrix p = std::cos(theta) * b1 + std::sin(theta) * b2;
    EigenDecomposition ed = hermitian_eig(p, cfg);
    return ed.values[1] - ed.values[0];
  };

  const int kScan = 1440;
  std::vector<double> vals(kScan);
  for (int i = 0; i < kScan; ++i) vals[static_cast<size_t>(i)] = gap(2.0 * M_PI * i / kScan);

  // local minima on the circular scan, refined by ternary search
  std::vector<std::pair<double, double>> found;  // (gap, theta)
  for (int i = 0; i < kScan; ++i) {
    double prev = vals[static_cast<size_t>((i + kScan - 1) % kScan)];
    double next = vals[static_cast<size_t>((i + 1) % kScan)];
    if (vals[static_cast<size_t>(i)] <= prev && vals[static_cast<size_t>(i)] <= next) {
      double lo = 2.0 * M_PI * (i - 1) / kScan, hi = 2.0 * M_PI * (i + 1) / kScan;
      for (int it = 0; it < 120; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (gap(m1) <= gap(m2))
          hi = m2;
        else
          lo = m1;
      }
      double theta = 0.5 * (lo + hi);
      found.emplace_back(gap(theta), theta);
    }
  }
  std::sort(found.begin(), found.end());

  for (const auto& [g, theta] : found) {
    if (g >= cfg.tuple_accept_tol * scale) break;
    double u1 = std::cos(theta), u2 = std::sin(theta);
    HermitianMatrix pen = u1 * b1 + u2 * b2;
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    double u0 = -ed.values[0];
    HermitianMatrix shifted = pen + u0 * herm_identity(3);
    // order-2 principal minors and the determinant must vanish
    bool minors_ok = true;
    for (int i = 0; i < 3 && minors_ok; ++i)
      for (int j = i + 1; j < 3 && minors_ok; ++j) {
        std::array<int, 2> idx{i, j};
        if (std::abs(principal_minor(shifted, idx)) > cfg.minor_tol * scale * scale)
          minors_ok = false;
      }
    std::array<int, 3> all{0, 1, 2};
    if (std::abs(principal_minor(shifted, all)) > cfg.minor_tol * scale * scale * scale)
      minors_ok = false;
    if (!minors_ok || numerical_rank(shifted, cfg.minor_tol) != 1) continue;

    if (tuple_out) *tuple_out = {u0, u1, u2};
    if (segment_out) {
      std::array<CVec, 2> basis{ed.vectors.column(0), ed.vectors.column(1)};
      HermitianMatrix c1 = compress(b1, basis);
      HermitianMatrix c2 = compress(b2, basis);
      *segment_out = detail::pair_image_segment(c1, c2);
    }
    return true;
  }
  return false;
}

// Classification of a reducible pair: joint eigenvalues give a triangle,
// segment, or point when the pair commutes; otherwise the range is the
// convex hull of a 2x2 block ellipse and a split-off eigenvalue point, a
// droplet exactly when that point falls strictly outside the ellipse.
inline ShapeDetails classify_reducible(const HermitianMatrix& b1, const HermitianMatrix& b2,
                                       const Settings& cfg = Settings{}) {
  if (b1.dim() != 3) throw std::invalid_argument("classify_reducible: order must be 3");
  int n = 3;
  double s1 = spectral_norm(b1), s2 = spectral_norm(b2);
  double scale = std::max({1.0, s1, s2});
  double comm = commutator(b1, b2).fro_norm();
  ShapeDetails out;

  if (comm <= 1e-10 * scale * scale) {
    std::vector<CVec> vecs = common_eigenvectors(b1, b2, cfg);
    if (static_cast<int>(vecs.size()) < n)
      throw std::runtime_error("commuting pair without a full joint eigenbasis (tolerance failure)");
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
      const CVec& v = vecs[static_cast<size_t>(i)];
      pts.push_back(Vec2{std::real(cdot(v, b1.mat().apply(v), n)),
                         std::real(cdot(v, b2.mat().apply(v), n))});
    }
    out.eigen_points = pts;
    double area = 0.5 * std::abs((pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1]) -
                                 (pts[1][1] - pts[0][1]) * (pts[2][0] - pts[0][0]));
    double spread = std::max({norm2(pts[1] - pts[0]), norm2(pts[2] - pts[0]), norm2(pts[2] - pts[1])});
    if (area > 1e-10 * scale * scale) {
      out.tag = ShapeClass::triangle;
      out.segments2d = {{pts[0], pts[1]}, {pts[1], pts[2]}, {pts[2], pts[0]}};
    } else if (spread > 1e-10 * scale) {
      out.tag = ShapeClass::segment;
      // extreme pair of the three collinear points
      std::array<Vec2, 2> ends{pts[0], pts[0]};
      double bestd = -1.0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (norm2(pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(i)]) > bestd) {
            bestd = norm2(pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(i)]);
            ends = {pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]};
          }
      out.segments2d = {ends};
    } else {
      out.tag = ShapeClass::point;
    }
    return out;
  }

  std::vector<CVec> vecs = common_eigenvectors(b1, b2, cfg);
  if (vecs.empty())
    throw std::runtime_error("reducible pair without a common eigenvector (tolerance failure)");
  const CVec& v = vecs[0];
  Vec2 split{std::real(cdot(v, b1.mat().apply(v), n)), std::real(cdot(v, b2.mat().apply(v), n))};

  // orthonormal complement of v
  std::vector<CVec> comp;
  for (int i = 0; i < n && static_cast<int>(comp.size()) < 2; ++i) {
    CVec w{};
    w[static_cast<size_t>(i)] = 1.0;
    cplx ov = cdot(v, w, n);
    for (int k = 0; k < n; ++k) w[static_cast<size_t>(k)] -= ov * v[static_cast<size_t>(k)];
    for (const CVec& prev : comp) {
      cplx o2 = cdot(prev, w, n);
      for (int k = 0; k < n; ++k) w[static_cast<size_t>(k)] -= o2 * prev[static_cast<size_t>(k)];
    }
    if (cnorm(w, n) > 1e-6) {
      cnormalize(w, n);
      comp.push_back(w);
    }
  }
  if (comp.size() != 2) throw std::runtime_error("failed to complete a basis around a common eigenvector");

  HermitianMatrix c1 = compress(b1, comp);
  HermitianMatrix c2 = compress(b2, comp);
  Range2x2 block = range_of_2x2(c1, c2);
  if (block.is_segment) {
    // block effectively normal: fall back to three eigen-points
    std::vector<Vec2> pts{split, block.segment_endpoints[0], block.segment_endpoints[1]};
    out.eigen_points = pts;
    double area = 0.5 * std::abs((pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1]) -
                                 (pts[1][1] - pts[0][1]) * (pts[2][0] - pts[0][0]));
    out.tag = (area > 1e-10 * scale * scale) ? ShapeClass::triangle : ShapeClass::segment;
    return out;
  }

  out.ellipse = block.ellipse;
  out.isolated_point = split;
  double loc = block.ellipse.location(split);
  double margin = cfg.droplet_boundary_tol;
  if (loc > 1.0 + margin) {
    out.tag = ShapeClass::droplet;
    std::array<Vec2, 2> tp = ellipse_tangent_points(block.ellipse, split);
    out.segments2d = {{split, tp[0]}, {split, tp[1]}};
  } else {
    out.tag = ShapeClass::ellipse;
    if (loc > 1.0 - margin) out.boundary_case = true;  // point sits on the boundary
  }
  return out;
}

inline ShapeDetails classify_shape_detailed(const HermitianMatrix& b1, const HermitianMatrix& b2,
                                            const Settings& cfg = Settings{}) {
  if (b1.dim() != 3 || b2.dim() != 3)
    throw std::invalid_argument("classify_shape: pair must be of order 3");
  bool borderline = false;
  if (is_unitarily_irreducible(b1, b2, cfg, &borderline)) {
    ShapeDetails out;
    out.borderline_irreducibility = borderline;
    if (auto e = ellipse_test(b1, b2, cfg)) {
      out.tag = ShapeClass::ellipse;
      out.ellipse = *e;
      return out;
    }
    std::array<double, 3> tuple{};
    std::array<Vec2, 2> seg{};
    if (loaf_test(b1, b2, cfg, &tuple, &seg)) {
      out.tag = ShapeClass::loaf;
      out.loaf_tuple = tuple;
      out.segments2d = {seg};
      return out;
    }
    out.tag = ShapeClass::oval;
    return out;
  }
  ShapeDetails out = classify_reducible(b1, b2, cfg);
  out.borderline_irreducibility = borderline;
  return out;
}

inline ShapeClass classify_shape(const HermitianMatrix& b1, const HermitianMatrix& b2,
                                 const Settings& cfg = Settings{}) {
  return classify_shape_detailed(b1, b2, cfg).tag;
}

}  // namespace jnr
