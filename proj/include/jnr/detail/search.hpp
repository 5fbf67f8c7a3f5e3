#pragma once

// Direction lattices, seeded RNG streams, a Nelder-Mead minimizer on local
// charts of the 2-sphere, and a deterministic parallel map. All consumers of
// randomness take explicit seeds; per-index streams keep results independent
// of thread count and iteration order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "jnr/vec3.hpp"

namespace jnr::detail {

// splitmix64: cheap, well-mixed stream derivation from (seed, index).
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 rng_stream(uint64_t seed, uint64_t index) {
  return std::mt19937_64(mix64(seed ^ mix64(index + 0x51ed2701c5a1e0b3ULL)));
}

// Near-uniform deterministic direction set; seed != 0 adds a jitter of about
// half the lattice spacing so repeated calls with different seeds decorrelate.
inline std::vector<Vec3> fibonacci_sphere(int count, uint64_t seed = 0) {
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<size_t>(count));
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  double spacing = std::sqrt(4.0 * M_PI / std::max(1, count));
  for (int k = 0; k < count; ++k) {
    double z = 1.0 - (2.0 * k + 1.0) / count;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * k;
    Vec3 u{r * std::cos(phi), r * std::sin(phi), z};
    if (seed != 0) {
      auto gen = rng_stream(seed, static_cast<uint64_t>(k));
      std::normal_distribution<double> nd(0.0, 0.25 * spacing);
      u = {u[0] + nd(gen), u[1] + nd(gen), u[2] + nd(gen)};
    }
    dirs.push_back(normalized(u));
  }
  return dirs;
}

inline Vec3 random_unit_vec3(std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  while (true) {
    Vec3 v{nd(gen), nd(gen), nd(gen)};
    double n = norm(v);
    if (n > 1e-8) return {v[0] / n, v[1] / n, v[2] / n};
  }
}

struct SphereMinResult {
  Vec3 point{0, 0, 1};
  double value = 0.0;
  int evaluations = 0;
};

// Nelder-Mead in a tangent chart u(x) = normalize(u0 + x1 t1 + x2 t2).
// One stage; callers re-chart at the result to polish.
template <typename F>
SphereMinResult nelder_mead_chart(const F& f, const Vec3& u0, double scale, int max_iter,
                                  double f_abs_tol) {
  Vec3 t1, t2;
  tangent_frame(u0, t1, t2);
  auto lift = [&](const Vec2& x) { return normalized(u0 + x[0] * t1 + x[1] * t2); };

  int evals = 0;
  auto eval = [&](const Vec2& x) {
    ++evals;
    return f(lift(x));
  };

  std::array<Vec2, 3> xs = {Vec2{0.0, 0.0}, Vec2{scale, 0.0}, Vec2{0.0, scale}};
  std::array<double, 3> fs{};
  for (int i = 0; i < 3; ++i) fs[static_cast<size_t>(i)] = eval(xs[static_cast<size_t>(i)]);

  auto order = [&]() {
    // insertion sort on 3 entries, stable
    for (int i = 1; i < 3; ++i)
      for (int j = i; j > 0 && fs[static_cast<size_t>(j)] < fs[static_cast<size_t>(j - 1)]; --j) {
        std::swap(fs[static_cast<size_t>(j)], fs[static_cast<size_t>(j - 1)]);
        std::swap(xs[static_cast<size_t>(j)], xs[static_cast<size_t>(j - 1)]);
      }
  };
  order();

  for (int it = 0; it < max_iter; ++it) {
    if (fs[2] - fs[0] < f_abs_tol) break;
    Vec2 centroid = 0.5 * (xs[0] + xs[1]);
    Vec2 refl = centroid + (centroid - xs[2]);
    double fr = eval(refl);
    if (fr < fs[0]) {
      Vec2 exp_ = centroid + 2.0 * (centroid - xs[2]);
      double fe = eval(exp_);
      if (fe < fr) {
        xs[2] = exp_;
        fs[2] = fe;
      } else {
        xs[2] = refl;
        fs[2] = fr;
      }
    } else if (fr < fs[1]) {
      xs[2] = refl;
      fs[2] = fr;
    } else {
      Vec2 con = centroid + 0.5 * ((fr < fs[2] ? refl : xs[2]) - centroid);
      double fc = eval(con);
      if (fc < std::min(fr, fs[2])) {
        xs[2] = con;
        fs[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          xs[static_cast<size_t>(i)] = xs[0] + 0.5 * (xs[static_cast<size_t>(i)] - xs[0]);
          fs[static_cast<size_t>(i)] = eval(xs[static_cast<size_t>(i)]);
        }
      }
    }
    order();
  }

  SphereMinResult r;
  r.point = lift(xs[0]);
  r.value = fs[0];
  r.evaluations = evals;
  return r;
}

// Multi-stage sphere minimization: coarse chart, then two re-charted polish
// stages with shrinking simplex scales. Eigenvalue-gap objectives are conical
// at their zeros, so the late stages converge linearly but from a tiny base.
template <typename F>
SphereMinResult sphere_minimize(const F& f, const Vec3& start, double coarse_scale, int max_iter,
                                double f_abs_tol) {
  SphereMinResult best = nelder_mead_chart(f, start, coarse_scale, max_iter, f_abs_tol);
  for (double s : {1e-4, 1e-7}) {
    SphereMinResult next = nelder_mead_chart(f, best.point, s, max_iter, f_abs_tol);
    next.evaluations += best.evaluations;
    if (next.value <= best.value)
      best = next;
    else
      best.evaluations = next.evaluations;
  }
  return best;
}

inline int thread_budget() {
  const char* env = std::getenv("JNR_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v < 1) return 1;
  return std::min(v, 64);
}

// Index-parallel map with results written to preassigned slots; output is
// identical for any thread count.
template <typename Fn>
void parallel_for(int count, const Fn& fn) {
  int threads = std::min(thread_budget(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mu;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < count; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace jnr::detail
