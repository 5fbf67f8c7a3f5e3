#pragma once

// Incremental convex hull in R^3 with a coplanarity band: points within
// tolerance of a supporting plane are absorbed instead of spawning sliver
// facets, which keeps hulls of sampled flat boundaries (polytopes, disks)
// clean. Near-degenerate orientation tests fall back to extended precision.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "jnr/vec3.hpp"

namespace jnr {

struct HullFace {
  int a = 0, b = 0, c = 0;  // indices into the input point set, outward CCW
  Vec3 unit_normal{0, 0, 0};
  double offset = 0.0;  // plane: dot(unit_normal, x) = offset
  double area = 0.0;
};

struct Hull3 {
  std::vector<HullFace> faces;
  std::vector<int> vertex_indices;  // sorted, unique
  bool degenerate = false;          // affine dimension < 3
  int dim_estimate = 3;
};

namespace detail {

// Signed distance of p from the plane through q0,q1,q2 (positive on the
// normal side). Recomputed in long double when the double result is within
// its roundoff band.
inline double plane_distance(const Vec3& q0, const Vec3& q1, const Vec3& q2, const Vec3& p) {
  Vec3 n = cross(q1 - q0, q2 - q0);
  double nn = norm(n);
  if (nn < 1e-300) return 0.0;
  double d = dot(n, p - q0) / nn;
  double mag = norm(q1 - q0) + norm(q2 - q0) + norm(p - q0);
  if (std::abs(d) < 64.0 * 2.2e-16 * mag) {
    long double ax = static_cast<long double>(q1[0]) - q0[0], ay = static_cast<long double>(q1[1]) - q0[1],
                az = static_cast<long double>(q1[2]) - q0[2];
    long double bx = static_cast<long double>(q2[0]) - q0[0], by = static_cast<long double>(q2[1]) - q0[1],
                bz = static_cast<long double>(q2[2]) - q0[2];
    long double px = static_cast<long double>(p[0]) - q0[0], py = static_cast<long double>(p[1]) - q0[1],
                pz = static_cast<long double>(p[2]) - q0[2];
    long double cxl = ay * bz - az * by, cyl = az * bx - ax * bz, czl = ax * by - ay * bx;
    long double nl = std::sqrt(cxl * cxl + cyl * cyl + czl * czl);
    if (nl < 1e-300L) return 0.0;
    d = static_cast<double>((cxl * px + cyl * py + czl * pz) / nl);
  }
  return d;
}

}  // namespace detail

inline Hull3 convex_hull(std::span<const Vec3> pts, double coplanar_rel = 1e-9) {
  Hull3 hull;
  int n = static_cast<int>(pts.size());
  if (n < 4) {
    hull.degenerate = true;
    hull.dim_estimate = std::max(0, n - 1);
    return hull;
  }

  Vec3 lo = pts[0], hi = pts[0];
  for (const Vec3& p : pts)
    for (int k = 0; k < 3; ++k) {
      lo[static_cast<size_t>(k)] = std::min(lo[static_cast<size_t>(k)], p[static_cast<size_t>(k)]);
      hi[static_cast<size_t>(k)] = std::max(hi[static_cast<size_t>(k)], p[static_cast<size_t>(k)]);
    }
  double scale = norm(hi - lo);
  double eps = std::max(coplanar_rel * scale, 1e-300);

  // Initial simplex from extreme points.
  int i0 = 0;
  for (int i = 1; i < n; ++i)
    if (pts[static_cast<size_t>(i)] < pts[static_cast<size_t>(i0)]) i0 = i;

  int i1 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    double d = dist(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(i0)]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) {
    hull.degenerate = true;
    hull.dim_estimate = 0;
    return hull;
  }

  Vec3 axis = normalized(pts[static_cast<size_t>(i1)] - pts[static_cast<size_t>(i0)]);
  int i2 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    Vec3 w = pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(i0)];
    double d = norm(w - dot(w, axis) * axis);
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) {
    hull.degenerate = true;
    hull.dim_estimate = 1;
    return hull;
  }

  int i3 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    double d = std::abs(detail::plane_distance(pts[static_cast<size_t>(i0)], pts[static_cast<size_t>(i1)],
                                               pts[static_cast<size_t>(i2)], pts[static_cast<size_t>(i)]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) {
    hull.degenerate = true;
    hull.dim_estimate = 2;
    return hull;
  }

  struct Tri {
    int a, b, c;
  };
  std::vector<Tri> faces;
  Vec3 centroid = 0.25 * (pts[static_cast<size_t>(i0)] + pts[static_cast<size_t>(i1)] +
                          pts[static_cast<size_t>(i2)] + pts[static_cast<size_t>(i3)]);
  auto add_oriented = [&](int a, int b, int c) {
    // orient so the centroid sits on the negative side
    if (detail::plane_distance(pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)],
                               pts[static_cast<size_t>(c)], centroid) > 0.0)
      std::swap(b, c);
    faces.push_back(Tri{a, b, c});
  };
  add_oriented(i0, i1, i2);
  add_oriented(i0, i1, i3);
  add_oriented(i0, i2, i3);
  add_oriented(i1, i2, i3);

  auto face_dist = [&](const Tri& t, const Vec3& p) {
    return detail::plane_distance(pts[static_cast<size_t>(t.a)], pts[static_cast<size_t>(t.b)],
                                  pts[static_cast<size_t>(t.c)], p);
  };

  std::vector<char> used(static_cast<size_t>(n), 0);
  used[static_cast<size_t>(i0)] = used[static_cast<size_t>(i1)] = 1;
  used[static_cast<size_t>(i2)] = used[static_cast<size_t>(i3)] = 1;

  std::vector<char> visible;
  for (int ip = 0; ip < n; ++ip) {
    if (used[static_cast<size_t>(ip)]) continue;
    const Vec3& p = pts[static_cast<size_t>(ip)];
    visible.assign(faces.size(), 0);
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (face_dist(faces[f], p) > eps) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // inside or within the coplanar band

    // Horizon: directed edges of visible faces whose undirected twin is not
    // covered by another visible face.
    std::map<std::pair<int, int>, int> edge_count;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const Tri& t = faces[f];
      const int e[3][2] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
      for (auto& ed : e) {
        int x = std::min(ed[0], ed[1]), y = std::max(ed[0], ed[1]);
        edge_count[{x, y}]++;
      }
    }
    std::vector<Tri> next;
    next.reserve(faces.size() + 8);
    std::vector<std::pair<int, int>> horizon;
    for (size_t f = 0; f < faces.size(); ++f) {
      const Tri& t = faces[f];
      if (!visible[f]) {
        next.push_back(t);
        continue;
      }
      const int e[3][2] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
      for (auto& ed : e) {
        int x = std::min(ed[0], ed[1]), y = std::max(ed[0], ed[1]);
        if (edge_count[{x, y}] == 1) horizon.emplace_back(ed[0], ed[1]);
      }
    }
    std::sort(horizon.begin(), horizon.end());
    for (auto& ed : horizon) next.push_back(Tri{ed.first, ed.second, ip});
    faces = std::move(next);
    used[static_cast<size_t>(ip)] = 1;
  }

  hull.faces.reserve(faces.size());
  std::vector<int> verts;
  for (const Tri& t : faces) {
    HullFace hf;
    hf.a = t.a;
    hf.b = t.b;
    hf.c = t.c;
    Vec3 cr = cross(pts[static_cast<size_t>(t.b)] - pts[static_cast<size_t>(t.a)],
                    pts[static_cast<size_t>(t.c)] - pts[static_cast<size_t>(t.a)]);
    double nn = norm(cr);
    hf.area = 0.5 * nn;
    if (nn > 1e-300) {
      hf.unit_normal = {cr[0] / nn, cr[1] / nn, cr[2] / nn};
      hf.offset = dot(hf.unit_normal, pts[static_cast<size_t>(t.a)]);
    }
    hull.faces.push_back(hf);
    verts.push_back(t.a);
    verts.push_back(t.b);
    verts.push_back(t.c);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  hull.vertex_indices = std::move(verts);
  return hull;
}

}  // namespace jnr
