#pragma once

// Separable numerical range of two-qubit observables: support values over
// product states (alternating ground-state iteration) and over states with
// positive partial transpose (interior-point barrier), which agree for two
// qubits. Plus boundary sampling, tangency certificates against the full
// range, and a probe for flat spots on the separable boundary.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "jnr/detail/search.hpp"
#include "jnr/geometry.hpp"
#include "jnr/hull3.hpp"
#include "jnr/linalg.hpp"
#include "jnr/settings.hpp"
#include "jnr/vec3.hpp"

namespace jnr {

struct ProductState {
  CVec a{};  // first qubit, entries 0..1
  CVec b{};  // second qubit, entries 0..1

  CVec joint() const {
    CVec v{};
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        v[static_cast<size_t>(2 * i + k)] = a[static_cast<size_t>(i)] * b[static_cast<size_t>(k)];
    return v;
  }
};

struct SeesawResult {
  double value = 0.0;
  ProductState state;
  int iterations = 0;
};

// Minimum of <a x b| h |a x b> over product states: alternate between the two
// qubits, each step solving an exact 2x2 ground-state problem. The iteration
// is monotone; restarts guard against local minima.
inline SeesawResult seesaw_min(const HermitianMatrix& h, const Settings& cfg = Settings{},
                               uint64_t seed = 1) {
  if (h.dim() != 4) throw std::invalid_argument("seesaw_min: order must be 4");
  double scale = std::max(1.0, h.fro_norm());

  auto ground2 = [&](const CMat& e) {
    EigenDecomposition ed = hermitian_eig(HermitianMatrix::from(e, 1e-6), cfg);
    return std::pair<CVec, double>(ed.vectors.column(0), ed.values[0]);
  };

  SeesawResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < cfg.seesaw_restarts; ++restart) {
    std::mt19937_64 gen = detail::rng_stream(seed, static_cast<uint64_t>(restart));
    std::normal_distribution<double> nd(0.0, 1.0);
    CVec b{};
    for (int k = 0; k < 2; ++k) b[static_cast<size_t>(k)] = cplx{nd(gen), nd(gen)};
    cnormalize(b, 2);
    CVec a{};
    double prev = std::numeric_limits<double>::infinity();
    double val = prev;
    int it = 0;
    for (; it < cfg.seesaw_max_iter; ++it) {
      CMat ea(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          cplx s = 0.0;
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
              s += h.at(2 * i + k, 2 * j + l) * std::conj(b[static_cast<size_t>(k)]) *
                   b[static_cast<size_t>(l)];
          ea.at(i, j) = s;
        }
      a = ground2(ea).first;

      CMat eb(2);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          cplx s = 0.0;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              s += h.at(2 * i + k, 2 * j + l) * std::conj(a[static_cast<size_t>(i)]) *
                   a[static_cast<size_t>(j)];
          eb.at(k, l) = s;
        }
      auto [bnew, value] = ground2(eb);
      b = bnew;
      val = value;
      if (std::abs(prev - val) < cfg.seesaw_converge * scale) break;
      prev = val;
    }
    if (val < best.value) {
      best.value = val;
      best.state.a = a;
      best.state.b = b;
      best.iterations = it;
    }
  }
  return best;
}

namespace detail {

// Gaussian elimination with partial pivoting for the small dense Newton
// systems (order up to 15).
inline bool solve_dense(std::vector<double>& a, std::vector<double>& rhs, int m) {
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[static_cast<size_t>(r * m + col)]) > std::abs(a[static_cast<size_t>(piv * m + col)]))
        piv = r;
    if (std::abs(a[static_cast<size_t>(piv * m + col)]) < 1e-300) return false;
    if (piv != col) {
      for (int c = 0; c < m; ++c)
        std::swap(a[static_cast<size_t>(col * m + c)], a[static_cast<size_t>(piv * m + c)]);
      std::swap(rhs[static_cast<size_t>(col)], rhs[static_cast<size_t>(piv)]);
    }
    double d = a[static_cast<size_t>(col * m + col)];
    for (int r = col + 1; r < m; ++r) {
      double f = a[static_cast<size_t>(r * m + col)] / d;
      if (f == 0.0) continue;
      for (int c = col; c < m; ++c)
        a[static_cast<size_t>(r * m + c)] -= f * a[static_cast<size_t>(col * m + c)];
      rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
    }
  }
  for (int r = m - 1; r >= 0; --r) {
    double s = rhs[static_cast<size_t>(r)];
    for (int c = r + 1; c < m; ++c) s -= a[static_cast<size_t>(r * m + c)] * rhs[static_cast<size_t>(c)];
    rhs[static_cast<size_t>(r)] = s / a[static_cast<size_t>(r * m + r)];
  }
  return true;
}

}  // namespace detail

struct BarrierResult {
  double value = 0.0;
  HermitianMatrix rho{4};
  double mu_final = 0.0;
  int newton_steps = 0;
  bool converged = false;
};

// Minimum of tr(rho h) over states with positive partial transpose, by a
// primal log-det barrier on both rho and its partial transpose, following the
// central path mu -> 0 with damped Newton steps in the traceless coordinates.
// The final duality gap is bounded by eight times the final mu.
inline BarrierResult ppt_min(const HermitianMatrix& h_in, const Settings& cfg = Settings{}) {
  if (h_in.dim() != 4) throw std::invalid_argument("ppt_min: order must be 4");
  double scale = std::max(1.0, h_in.fro_norm());
  HermitianMatrix h = (1.0 / scale) * h_in;

  const std::vector<HermitianMatrix> basis = traceless_basis(4);
  const int m = static_cast<int>(basis.size());  // 15
  std::vector<HermitianMatrix> basis_pt;
  basis_pt.reserve(static_cast<size_t>(m));
  for (const HermitianMatrix& t : basis) basis_pt.push_back(partial_transpose(t));

  std::vector<double> x(static_cast<size_t>(m), 0.0);  // rho = I/4 + sum x_j T_j
  auto assemble = [&](const std::vector<double>& xs) {
    CMat r = cplx{0.25, 0.0} * CMat::identity(4);
    for (int j = 0; j < m; ++j)
      r = r + cplx{xs[static_cast<size_t>(j)], 0.0} * basis[static_cast<size_t>(j)].mat();
    return HermitianMatrix::from(r, 1e-6);
  };

  auto min_eig = [&](const HermitianMatrix& a) {
    EigenDecomposition ed = hermitian_eig(a, cfg);
    return ed.values[0];
  };

  BarrierResult out;
  HermitianMatrix rho = assemble(x);
  int steps = 0;
  for (double mu = cfg.barrier_mu_start; mu >= cfg.barrier_mu_min; mu *= cfg.barrier_mu_shrink) {
    for (int newton = 0; newton < cfg.barrier_max_newton; ++newton) {
      HermitianMatrix rpt = partial_transpose(rho);
      CMat rinv = inverse(rho.mat());
      CMat pinv = inverse(rpt.mat());

      std::vector<double> grad(static_cast<size_t>(m));
      std::vector<CMat> mj, pj;
      mj.reserve(static_cast<size_t>(m));
      pj.reserve(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) {
        const CMat& tj = basis[static_cast<size_t>(j)].mat();
        const CMat& tjp = basis_pt[static_cast<size_t>(j)].mat();
        grad[static_cast<size_t>(j)] = frobenius_inner(h, basis[static_cast<size_t>(j)]) -
                                       mu * std::real((rinv * tj).trace()) -
                                       mu * std::real((pinv * tjp).trace());
        mj.push_back(rinv * tj);
        pj.push_back(pinv * tjp);
      }
      std::vector<double> hess(static_cast<size_t>(m * m), 0.0);
      for (int j = 0; j < m; ++j)
        for (int k = j; k < m; ++k) {
          double v = mu * std::real((mj[static_cast<size_t>(j)] * mj[static_cast<size_t>(k)]).trace()) +
                     mu * std::real((pj[static_cast<size_t>(j)] * pj[static_cast<size_t>(k)]).trace());
          hess[static_cast<size_t>(j * m + k)] = v;
          hess[static_cast<size_t>(k * m + j)] = v;
        }
      for (int j = 0; j < m; ++j) hess[static_cast<size_t>(j * m + j)] += 1e-14 * mu;

      std::vector<double> step = grad;
      std::vector<double> hcopy = hess;
      if (!detail::solve_dense(hcopy, step, m)) break;

      double decrement2 = 0.0;
      for (int j = 0; j < m; ++j) decrement2 += grad[static_cast<size_t>(j)] * step[static_cast<size_t>(j)];
      ++steps;

      double alpha = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 50; ++bt) {
        std::vector<double> xn = x;
        for (int j = 0; j < m; ++j) xn[static_cast<size_t>(j)] -= alpha * step[static_cast<size_t>(j)];
        HermitianMatrix rn = assemble(xn);
        if (min_eig(rn) > 1e-14 && min_eig(partial_transpose(rn)) > 1e-14) {
          x = xn;
          rho = rn;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
      if (decrement2 * 0.5 < cfg.barrier_newton_tol) break;
    }
    out.mu_final = mu;
  }
  out.rho = rho;
  out.value = frobenius_inner(h_in, rho);
  out.newton_steps = steps;
  out.converged = true;
  return out;
}

// Support data of the separable range in one direction, with the full-range
// value for comparison. For two qubits the product and partial-transpose
// minima agree; a product value strictly below the partial-transpose one is
// impossible and is flagged if seen.
struct SepSupport {
  Direction direction{0, 0, 1};
  double jnr_value = 0.0;      // lambda_min of the pencil
  double product_value = 0.0;  // minimum over product states
  double ppt_value = 0.0;      // minimum over PPT states
  ProductState state;
  Vec3 point{0, 0, 0};  // separable boundary point from the product minimizer
};

inline SepSupport sep_support(const MatrixTriple& t, const Direction& u,
                              const Settings& cfg = Settings{}, uint64_t seed = 1,
                              std::vector<Event>* events = nullptr) {
  if (t.dim() != 4) throw std::invalid_argument("sep_support: order must be 4");
  HermitianMatrix pen = t.pencil(u.u);
  SepSupport s;
  s.direction = u;
  EigenDecomposition ed = hermitian_eig(pen, cfg);
  s.jnr_value = ed.values[0];
  SeesawResult see = seesaw_min(pen, cfg, seed);
  s.product_value = see.value;
  s.state = see.state;
  BarrierResult bar = ppt_min(pen, cfg);
  s.ppt_value = bar.value;
  s.point = measure_pure(t, see.state.joint());
  double tol = 1e-6 * t.scale();
  if (s.product_value < s.ppt_value - tol)
    push_event(events, Event::Severity::falsification, "product-below-ppt",
               "product-state minimum fell below the partial-transpose minimum");
  if (s.ppt_value > s.product_value + tol)
    push_event(events, Event::Severity::warning, "seesaw-gap",
               "product search did not reach the partial-transpose minimum; "
               "possible local-minimum trap");
  return s;
}

struct SepSample {
  std::vector<Vec3> dirs;
  std::vector<double> jnr_values;
  std::vector<double> sep_values;
  std::vector<Vec3> points;
  Hull3 hull;
};

inline SepSample sample_sep_boundary(const MatrixTriple& t, int num_dirs, uint64_t seed,
                                     const Settings& cfg = Settings{}) {
  if (num_dirs < 4) throw std::invalid_argument("sample_sep_boundary: need at least 4 directions");
  SepSample s;
  s.dirs = detail::fibonacci_sphere(num_dirs, seed);
  s.jnr_values.resize(static_cast<size_t>(num_dirs));
  s.sep_values.resize(static_cast<size_t>(num_dirs));
  s.points.resize(static_cast<size_t>(num_dirs));
  detail::parallel_for(num_dirs, [&](int i) {
    const Vec3& u = s.dirs[static_cast<size_t>(i)];
    HermitianMatrix pen = t.pencil(u);
    EigenDecomposition ed = hermitian_eig(pen, cfg);
    SeesawResult see = seesaw_min(pen, cfg, seed + static_cast<uint64_t>(i) * 7919u);
    s.jnr_values[static_cast<size_t>(i)] = ed.values[0];
    s.sep_values[static_cast<size_t>(i)] = see.value;
    s.points[static_cast<size_t>(i)] = measure_pure(t, see.state.joint());
  });
  s.hull = convex_hull(s.points, cfg.hull_coplanar_rel);
  return s;
}

// Certificate that the separable range touches the full range at the face
// exposed by u: their support values in that direction coincide.
struct TangencyResult {
  Direction direction{0, 0, 1};
  double jnr_value = 0.0;
  double sep_value = 0.0;
  double gap = 0.0;
  bool tangent = false;
};

inline TangencyResult tangency_check(const MatrixTriple& t, const Direction& u,
                                     const Settings& cfg = Settings{}, uint64_t seed = 1) {
  TangencyResult r;
  r.direction = u;
  HermitianMatrix pen = t.pencil(u.u);
  EigenDecomposition ed = hermitian_eig(pen, cfg);
  r.jnr_value = ed.values[0];
  r.sep_value = seesaw_min(pen, cfg, seed).value;
  r.gap = r.sep_value - r.jnr_value;
  r.tangent = std::abs(r.gap) < 1e-6 * t.scale();
  return r;
}

// Heuristic probe for one-dimensional flats ("segments") on the separable
// boundary: hull facets of a boundary sample are clustered by normal, and
// clusters with outsized area or slivers with extreme aspect are reported.
struct FlatSpot {
  Vec3 normal{0, 0, 1};
  double area_fraction = 0.0;
  double max_aspect = 0.0;
  int facet_count = 0;
};

struct ProbeReport {
  std::vector<FlatSpot> spots;
  double total_area = 0.0;
  int flagged = 0;
};

inline ProbeReport segment_probe(const MatrixTriple& t, int num_dirs = 600, uint64_t seed = 1,
                                 const Settings& cfg = Settings{},
                                 std::vector<Event>* events = nullptr) {
  SepSample sample = sample_sep_boundary(t, num_dirs, seed, cfg);
  ProbeReport rep;
  const Hull3& hull = sample.hull;
  if (hull.degenerate) return rep;

  for (const HullFace& f : hull.faces) rep.total_area += f.area;
  if (rep.total_area <= 0.0) return rep;

  auto aspect = [&](const HullFace& f) {
    const Vec3& a = sample.points[static_cast<size_t>(f.a)];
    const Vec3& b = sample.points[static_cast<size_t>(f.b)];
    const Vec3& c = sample.points[static_cast<size_t>(f.c)];
    double lmax = std::max({dist(a, b), dist(b, c), dist(c, a)});
    if (f.area <= 1e-300) return 1e9;
    return lmax * lmax / (2.0 * f.area);
  };

  std::vector<bool> used(hull.faces.size(), false);
  for (size_t i = 0; i < hull.faces.size(); ++i) {
    if (used[i]) continue;
    FlatSpot spot;
    spot.normal = hull.faces[i].unit_normal;
    double area = 0.0;
    for (size_t j = i; j < hull.faces.size(); ++j) {
      if (used[j]) continue;
      if (angle_between(spot.normal, hull.faces[j].unit_normal) < cfg.probe_normal_cluster) {
        used[j] = true;
        area += hull.faces[j].area;
        spot.max_aspect = std::max(spot.max_aspect, aspect(hull.faces[j]));
        spot.facet_count++;
      }
    }
    spot.area_fraction = area / rep.total_area;
    rep.spots.push_back(spot);
  }
  std::sort(rep.spots.begin(), rep.spots.end(),
            [](const FlatSpot& a, const FlatSpot& b) { return a.area_fraction > b.area_fraction; });
  for (const FlatSpot& s : rep.spots)
    if (s.area_fraction > cfg.probe_area_fraction || s.max_aspect > cfg.probe_aspect) {
      rep.flagged++;
      push_event(events, Event::Severity::warning, "separable-flat-spot",
                 "separable boundary sample shows a facet cluster with outsized area or "
                 "aspect; possible one-dimensional flat");
    }
  return rep;
}

}  // namespace jnr
