#pragma once

// Corner-point machinery: probe-based corner verdicts (a corner supports a
// full-dimensional cone of exposing directions), joint spectra of commuting
// triples, and the splitting of the state space at a corner.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "jnr/detail/search.hpp"
#include "jnr/geometry.hpp"
#include "jnr/linalg.hpp"
#include "jnr/settings.hpp"
#include "jnr/vec3.hpp"

namespace jnr {

// Simultaneous eigenvalue triples, found by successive eigenspace
// compression and certified by per-matrix residuals. Empty when the triple
// has no common eigenvector.
struct JointSpectrumPoint {
  Vec3 value{0, 0, 0};
  CVec state{};
  double residual = 0.0;
};

inline std::vector<JointSpectrumPoint> joint_spectrum(const MatrixTriple& t,
                                                      const Settings& cfg = Settings{}) {
  int n = t.dim();
  std::array<double, 3> norms{std::max(1.0, spectral_norm(t.a1)), std::max(1.0, spectral_norm(t.a2)),
                              std::max(1.0, spectral_norm(t.a3))};

  // cluster an eigendecomposition of `h` restricted to `basis`, returning the
  // lifted bases of its eigenspace clusters
  auto split = [&](const HermitianMatrix& h, const std::vector<CVec>& basis, double hnorm) {
    std::vector<std::vector<CVec>> parts;
    int r = static_cast<int>(basis.size());
    HermitianMatrix c = compress(h, basis);
    EigenDecomposition ed = hermitian_eig(c, cfg);
    double gap = cfg.cluster_gap_tol * hnorm;
    int start = 0;
    while (start < r) {
      int stop = start + 1;
      while (stop < r &&
             ed.values[static_cast<size_t>(stop)] - ed.values[static_cast<size_t>(stop - 1)] <= gap)
        ++stop;
      std::vector<CVec> lifted;
      for (int j = start; j < stop; ++j) {
        CVec v{};
        for (int i = 0; i < n; ++i) {
          cplx s = 0.0;
          for (int k = 0; k < r; ++k)
            s += basis[static_cast<size_t>(k)][static_cast<size_t>(i)] * ed.vectors.at(k, j);
          v[static_cast<size_t>(i)] = s;
        }
        lifted.push_back(v);
      }
      parts.push_back(std::move(lifted));
      start = stop;
    }
    return parts;
  };

  std::vector<CVec> full;
  for (int i = 0; i < n; ++i) {
    CVec e{};
    e[static_cast<size_t>(i)] = 1.0;
    full.push_back(e);
  }

  std::vector<JointSpectrumPoint> out;
  for (const auto& p1 : split(t.a1, full, norms[0]))
    for (const auto& p2 : split(t.a2, p1, norms[1]))
      for (const auto& p3 : split(t.a3, p2, norms[2]))
        for (const CVec& v : p3) {
          JointSpectrumPoint jp;
          jp.state = v;
          double worst = 0.0;
          const std::array<const HermitianMatrix*, 3> mats{&t.a1, &t.a2, &t.a3};
          for (int i = 0; i < 3; ++i) {
            CVec mv = mats[static_cast<size_t>(i)]->mat().apply(v);
            double lam = std::real(cdot(v, mv, n));
            jp.value[static_cast<size_t>(i)] = lam;
            double res = 0.0;
            for (int k = 0; k < n; ++k)
              res += std::norm(mv[static_cast<size_t>(k)] - lam * v[static_cast<size_t>(k)]);
            worst = std::max(worst, std::sqrt(res) / norms[static_cast<size_t>(i)]);
          }
          jp.residual = worst;
          if (worst <= 1e-8) out.push_back(std::move(jp));
        }
  std::sort(out.begin(), out.end(), [](const JointSpectrumPoint& a, const JointSpectrumPoint& b) {
    if (a.value[0] != b.value[0]) return a.value[0] < b.value[0];
    if (a.value[1] != b.value[1]) return a.value[1] < b.value[1];
    return a.value[2] < b.value[2];
  });
  return out;
}

// Verdict of the probe test at a boundary point: directions whose exposed
// face contains the point are collected, and the point is a corner exactly
// when they span all three dimensions (a solid normal cone). Smooth boundary
// points collect at most a single probe, edge points a planar band.
struct CornerVerdict {
  bool is_corner = false;
  int hits = 0;
  int cone_rank = 0;
  double min_margin = 0.0;  // min over probes of u.p - h(u); < 0 means p lies outside
  Vec3 point{0, 0, 0};
};

inline CornerVerdict is_corner_point(const MatrixTriple& t, const Vec3& p,
                                     const Settings& cfg = Settings{}, uint64_t seed = 1,
                                     std::vector<Vec3>* hit_dirs_out = nullptr) {
  double scale = t.scale();
  std::vector<Vec3> dirs = detail::fibonacci_sphere(cfg.corner_probes, seed);
  std::vector<double> margins(dirs.size());
  detail::parallel_for(static_cast<int>(dirs.size()), [&](int i) {
    const Vec3& u = dirs[static_cast<size_t>(i)];
    HermitianMatrix pen = t.pencil(u);
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    margins[static_cast<size_t>(i)] = dot(u, p) - ed.values[0];
  });

  CornerVerdict v;
  v.point = p;
  v.min_margin = margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
  double tol = cfg.corner_support_tol * scale;
  std::vector<Vec3> hits;
  for (size_t i = 0; i < dirs.size(); ++i)
    if (margins[i] < tol) hits.push_back(dirs[i]);
  v.hits = static_cast<int>(hits.size());
  if (hit_dirs_out) *hit_dirs_out = hits;
  if (hits.size() < 3) return v;

  CMat gram(3);
  for (const Vec3& u : hits)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        gram.at(a, b) += u[static_cast<size_t>(a)] * u[static_cast<size_t>(b)];
  EigenDecomposition ed = hermitian_eig(HermitianMatrix::from(gram, 1e-6));
  double smax = std::sqrt(std::max(ed.values[2], 0.0));
  int rank = 0;
  for (int i = 0; i < 3; ++i)
    if (std::sqrt(std::max(ed.values[static_cast<size_t>(i)], 0.0)) > cfg.corner_rank_tol * smax)
      ++rank;
  v.cone_rank = rank;
  v.is_corner = (rank == 3);
  return v;
}

// Distance-like margin of x to the boundary: inf over directions of
// u.x - h(u). Zero on the boundary, positive inside, negative outside.
inline double boundary_margin(const MatrixTriple& t, const Vec3& x, const Settings& cfg = Settings{},
                              uint64_t seed = 1) {
  auto m = [&](const Vec3& u) {
    HermitianMatrix pen = t.pencil(u);
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    return dot(u, x) - ed.values[0];
  };
  std::vector<Vec3> dirs = detail::fibonacci_sphere(128, seed);
  Vec3 best_dir = dirs[0];
  double best = m(dirs[0]);
  for (const Vec3& u : dirs) {
    double val = m(u);
    if (val < best) {
      best = val;
      best_dir = u;
    }
  }
  detail::SphereMinResult r = detail::sphere_minimize(m, best_dir, 0.2, cfg.nm_max_iter, 0.0);
  return std::min(best, r.value);
}

// For order-four triples, three distinct boundary segments meeting at a point
// force a corner there; this validates the hypothesis and reports both it and
// the probe verdict. For other orders only the probe verdict is meaningful.
struct ThreeSegmentCheck {
  bool hypothesis_valid = false;  // three distinct boundary segments through p
  CornerVerdict verdict;
  bool order_four = false;
};

inline ThreeSegmentCheck check_three_segment_corner(const MatrixTriple& t, const Vec3& p,
                                                    std::span<const Segment3> segments,
                                                    const Settings& cfg = Settings{},
                                                    uint64_t seed = 1) {
  ThreeSegmentCheck out;
  out.order_four = (t.dim() == 4);
  double scale = t.scale();
  double tol = 1e-6 * scale;

  auto dist_point_segment = [](const Vec3& q, const Segment3& s) {
    Vec3 d = s.b - s.a;
    double len2 = dot(d, d);
    if (len2 < 1e-30) return dist(q, s.a);
    double tt = std::clamp(dot(q - s.a, d) / len2, 0.0, 1.0);
    return dist(q, s.a + tt * d);
  };

  bool valid = segments.size() >= 3;
  if (valid) {
    for (const Segment3& s : segments) {
      if (dist_point_segment(p, s) > tol) valid = false;
      if (s.length() < 1e-4 * scale) valid = false;
      for (const Vec3& q : {s.a, s.b, s.midpoint()})
        if (valid && std::abs(boundary_margin(t, q, cfg, seed)) > 1e-5 * scale) valid = false;
      if (!valid) break;
    }
  }
  if (valid) {
    // pairwise distinct directions
    for (size_t i = 0; i < segments.size() && valid; ++i)
      for (size_t j = i + 1; j < segments.size() && valid; ++j) {
        Vec3 di = normalized(segments[i].b - segments[i].a);
        Vec3 dj = normalized(segments[j].b - segments[j].a);
        if (std::min(angle_between(di, dj), angle_between(di, Vec3{-dj[0], -dj[1], -dj[2]})) < 1e-3)
          valid = false;
      }
  }
  out.hypothesis_valid = valid;
  out.verdict = is_corner_point(t, p, cfg, seed);
  return out;
}

// At a corner the minimizing state is a common eigenvector; splitting it off
// compresses the triple to the orthogonal complement.
struct CornerSplit {
  bool common_eigenvector = false;
  CVec state{};
  Vec3 eigenvalue{0, 0, 0};
  double residual = 0.0;
  std::optional<MatrixTriple> rest;
};

inline CornerSplit split_at_corner(const MatrixTriple& t, const Vec3& p,
                                   const Settings& cfg = Settings{}, uint64_t seed = 1) {
  CornerSplit out;
  std::vector<Vec3> hits;
  CornerVerdict v = is_corner_point(t, p, cfg, seed, &hits);
  if (!v.is_corner) return out;

  Vec3 mean{0, 0, 0};
  for (const Vec3& u : hits) mean = mean + u;
  Direction w(mean);
  SupportResult sup = support(t, w, cfg);
  const CVec& psi = sup.eigenbasis[0];

  int n = t.dim();
  const std::array<const HermitianMatrix*, 3> mats{&t.a1, &t.a2, &t.a3};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    CVec mv = mats[static_cast<size_t>(i)]->mat().apply(psi);
    double lam = std::real(cdot(psi, mv, n));
    out.eigenvalue[static_cast<size_t>(i)] = lam;
    double res = 0.0;
    for (int k = 0; k < n; ++k)
      res += std::norm(mv[static_cast<size_t>(k)] - lam * psi[static_cast<size_t>(k)]);
    worst = std::max(worst, std::sqrt(res) / std::max(1.0, spectral_norm(*mats[static_cast<size_t>(i)])));
  }
  out.state = psi;
  out.residual = worst;
  if (worst > 1e-6 || dist(out.eigenvalue, p) > 1e-5 * t.scale()) return out;
  out.common_eigenvector = true;

  std::vector<CVec> comp;
  for (int i = 0; i < n && static_cast<int>(comp.size()) < n - 1; ++i) {
    CVec e{};
    e[static_cast<size_t>(i)] = 1.0;
    cplx ov = cdot(psi, e, n);
    for (int k = 0; k < n; ++k) e[static_cast<size_t>(k)] -= ov * psi[static_cast<size_t>(k)];
    for (const CVec& prev : comp) {
      cplx o2 = cdot(prev, e, n);
      for (int k = 0; k < n; ++k) e[static_cast<size_t>(k)] -= o2 * prev[static_cast<size_t>(k)];
    }
    if (cnorm(e, n) > 1e-6) {
      cnormalize(e, n);
      comp.push_back(e);
    }
  }
  if (static_cast<int>(comp.size()) == n - 1)
    out.rest.emplace(compress(t.a1, comp), compress(t.a2, comp), compress(t.a3, comp));
  return out;
}

}  // namespace jnr
