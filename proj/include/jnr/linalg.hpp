#pragma once

// Dense complex linear algebra for matrices of order <= 5: value types with
// inline storage, a cyclic Jacobi eigensolver for hermitian matrices, and the
// small set of operations the face-structure machinery is built from
// (principal minors, compressions, Kronecker products, partial transposes).
//
// Everything here is deterministic: no randomized pivoting, no threading, and
// a fixed sweep order in the eigensolver, so identical inputs produce
// identical bits on every run.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "jnr/settings.hpp"
#include "jnr/vec3.hpp"

namespace jnr {

inline constexpr int kMaxDim = 5;

using cplx = std::complex<double>;

// Fixed-capacity complex vector (dimension carried separately by the caller).
using CVec = std::array<cplx, kMaxDim>;

inline cplx cdot(const CVec& x, const CVec& y, int n) {
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline double cnorm(const CVec& x, int n) { return std::sqrt(std::real(cdot(x, x, n))); }

inline void cnormalize(CVec& x, int n) {
  double m = cnorm(x, n);
  if (m < 1e-300) throw std::invalid_argument("cannot normalize a zero vector");
  for (int i = 0; i < n; ++i) x[i] /= m;
}

// Dense complex square matrix of order n <= 5, row-major inline storage.
class CMat {
 public:
  CMat() = default;
  explicit CMat(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("matrix order must be in 1..5");
    a_.fill(cplx{0.0, 0.0});
  }

  static CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }

  cplx& at(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }
  const cplx& at(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }

  CMat adjoint() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
  }

  CMat transpose() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  double fro_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_ * n_; ++i) s += std::norm(a_[static_cast<size_t>(i)]);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_ * n_; ++i) m = std::max(m, std::abs(a_[static_cast<size_t>(i)]));
    return m;
  }

  // ||X - X*||_F, the absolute hermiticity defect.
  double asymmetry() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += std::norm(at(i, j) - std::conj(at(j, i)));
    return std::sqrt(s);
  }

  CVec column(int j) const {
    CVec c{};
    for (int i = 0; i < n_; ++i) c[static_cast<size_t>(i)] = at(i, j);
    return c;
  }

  CVec apply(const CVec& x) const {
    CVec y{};
    for (int i = 0; i < n_; ++i) {
      cplx s = 0.0;
      for (int j = 0; j < n_; ++j) s += at(i, j) * x[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = s;
    }
    return y;
  }

  friend CMat operator+(const CMat& a, const CMat& b) {
    check_same(a, b);
    CMat r(a.n_);
    for (int i = 0; i < a.n_ * a.n_; ++i) r.a_[static_cast<size_t>(i)] = a.a_[static_cast<size_t>(i)] + b.a_[static_cast<size_t>(i)];
    return r;
  }
  friend CMat operator-(const CMat& a, const CMat& b) {
    check_same(a, b);
    CMat r(a.n_);
    for (int i = 0; i < a.n_ * a.n_; ++i) r.a_[static_cast<size_t>(i)] = a.a_[static_cast<size_t>(i)] - b.a_[static_cast<size_t>(i)];
    return r;
  }
  friend CMat operator*(const cplx& s, const CMat& a) {
    CMat r(a.n_);
    for (int i = 0; i < a.n_ * a.n_; ++i) r.a_[static_cast<size_t>(i)] = s * a.a_[static_cast<size_t>(i)];
    return r;
  }
  friend CMat operator*(const CMat& a, const CMat& b) {
    check_same(a, b);
    CMat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        cplx aik = a.at(i, k);
        if (aik == cplx{0.0, 0.0}) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

 private:
  static void check_same(const CMat& a, const CMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix order mismatch");
  }

  int n_ = 0;
  std::array<cplx, kMaxDim * kMaxDim> a_{};
};

// Determinant via LU with partial pivoting.
inline cplx det(const CMat& m) {
  int n = m.dim();
  CMat lu = m;
  cplx d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(lu.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(lu.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu.at(k, j), lu.at(piv, j));
      d = -d;
    }
    d *= lu.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      cplx f = lu.at(i, k) / lu.at(k, k);
      for (int j = k + 1; j < n; ++j) lu.at(i, j) -= f * lu.at(k, j);
    }
  }
  return d;
}

// Inverse via Gauss-Jordan with partial pivoting; throws on (near-)singular
// input. Used by the interior-point solver where iterates stay well inside
// the positive cone.
inline CMat inverse(const CMat& m) {
  int n = m.dim();
  CMat a = m;
  CMat inv = CMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < 1e-300) throw std::runtime_error("singular matrix in inverse()");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    cplx d = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      cplx f = a.at(i, k);
      if (f == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

// Hermitian matrix of order 1..5. Construction goes through from(), which
// symmetrizes (X + X*)/2 and rejects inputs whose relative asymmetry exceeds
// the configured tolerance; after that the invariant A == A* holds exactly.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int n) : m_(n) {}

  static HermitianMatrix from(const CMat& x, double rel_tol = Settings{}.hermiticity_rel_tol) {
    double scale = x.fro_norm();
    if (x.asymmetry() > rel_tol * std::max(scale, 1e-30) && scale > 0.0)
      throw std::invalid_argument("matrix is not hermitian within tolerance");
    HermitianMatrix h(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
      h.m_.at(i, i) = std::real(x.at(i, i));
      for (int j = i + 1; j < x.dim(); ++j) {
        cplx v = 0.5 * (x.at(i, j) + std::conj(x.at(j, i)));
        h.m_.at(i, j) = v;
        h.m_.at(j, i) = std::conj(v);
      }
    }
    return h;
  }

  static HermitianMatrix diagonal(std::span<const double> d) {
    HermitianMatrix h(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) h.m_.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return h;
  }

  int dim() const { return m_.dim(); }
  const CMat& mat() const { return m_; }
  cplx at(int i, int j) const { return m_.at(i, j); }

  // Sets entry (i,j) and its mirror; diagonal entries keep only their real part.
  void set(int i, int j, cplx v) {
    if (i == j) {
      m_.at(i, i) = std::real(v);
    } else {
      m_.at(i, j) = v;
      m_.at(j, i) = std::conj(v);
    }
  }

  double fro_norm() const { return m_.fro_norm(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix r;
    r.m_ = a.m_ + b.m_;
    return r;
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix r;
    r.m_ = a.m_ - b.m_;
    return r;
  }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    HermitianMatrix r;
    r.m_ = cplx{s, 0.0} * a.m_;
    return r;
  }

 private:
  CMat m_;
};

inline HermitianMatrix herm_identity(int n) { return HermitianMatrix::from(CMat::identity(n)); }

// Eigenvalues ascending; columns of `vectors` are the matching orthonormal
// eigenvectors.
struct EigenDecomposition {
  int n = 0;
  std::array<double, kMaxDim> values{};
  CMat vectors;
};

// Cyclic complex Jacobi. Each (p,q) step applies the exact 2x2 unitary that
// annihilates the off-diagonal entry: a phase transport making the pivot real
// followed by the classical symmetric rotation. Quadratic convergence leaves
// residuals near machine precision for these orders, and the fixed sweep
// order makes the decomposition reproducible bit-for-bit.
inline EigenDecomposition hermitian_eig(const HermitianMatrix& a,
                                        const Settings& cfg = Settings{}) {
  int n = a.dim();
  CMat m = a.mat();
  CMat v = CMat::identity(n);
  double scale = m.fro_norm();

  if (scale > 0.0) {
    for (int sweep = 0; sweep < cfg.eig_max_sweeps; ++sweep) {
      double off = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(m.at(p, q));
      if (std::sqrt(off) <= cfg.eig_off_rel_tol * scale) break;

      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          double r = std::abs(m.at(p, q));
          if (r <= 1e-18 * scale) {
            m.at(p, q) = 0.0;
            m.at(q, p) = 0.0;
            continue;
          }
          cplx phase = m.at(p, q) / r;  // e^{i phi}
          double app = std::real(m.at(p, p));
          double aqq = std::real(m.at(q, q));
          double tau = (aqq - app) / (2.0 * r);
          double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;
          cplx ep = std::conj(phase);  // e^{-i phi}

          // Columns: M <- M U with U = diag(1, e^{-i phi}) * rotation(c, s).
          for (int k = 0; k < n; ++k) {
            cplx mkp = m.at(k, p), mkq = m.at(k, q);
            m.at(k, p) = c * mkp - s * ep * mkq;
            m.at(k, q) = s * mkp + c * ep * mkq;
          }
          // Rows: M <- U* M.
          for (int k = 0; k < n; ++k) {
            cplx mpk = m.at(p, k), mqk = m.at(q, k);
            m.at(p, k) = c * mpk - s * phase * mqk;
            m.at(q, k) = s * mpk + c * phase * mqk;
          }
          m.at(p, q) = 0.0;
          m.at(q, p) = 0.0;
          m.at(p, p) = app - t * r;
          m.at(q, q) = aqq + t * r;

          for (int k = 0; k < n; ++k) {
            cplx vkp = v.at(k, p), vkq = v.at(k, q);
            v.at(k, p) = c * vkp - s * ep * vkq;
            v.at(k, q) = s * vkp + c * ep * vkq;
          }
        }
      }
    }
  }

  EigenDecomposition ed;
  ed.n = n;
  std::array<int, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int i, int j) { return std::real(m.at(i, i)) < std::real(m.at(j, j)); });
  ed.vectors = CMat(n);
  for (int j = 0; j < n; ++j) {
    ed.values[static_cast<size_t>(j)] = std::real(m.at(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]));
    for (int i = 0; i < n; ++i) ed.vectors.at(i, j) = v.at(i, order[static_cast<size_t>(j)]);
  }

  // Degenerate clusters: re-orthonormalize in index order so the basis choice
  // inside an eigenspace is a deterministic function of the input.
  double gap = 1e-8 * std::max(1.0, scale);
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && ed.values[static_cast<size_t>(stop)] - ed.values[static_cast<size_t>(stop - 1)] <= gap) ++stop;
    for (int j = start; j < stop; ++j) {
      CVec col = ed.vectors.column(j);
      for (int k = start; k < j; ++k) {
        CVec prev = ed.vectors.column(k);
        cplx ov = cdot(prev, col, n);
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] -= ov * prev[static_cast<size_t>(i)];
      }
      cnormalize(col, n);
      for (int i = 0; i < n; ++i) ed.vectors.at(i, j) = col[static_cast<size_t>(i)];
    }
    start = stop;
  }

  // Phase convention: largest-magnitude component real positive.
  for (int j = 0; j < n; ++j) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      double m2 = std::abs(ed.vectors.at(i, j));
      if (m2 > best + 1e-15) {
        best = m2;
        imax = i;
      }
    }
    cplx piv = ed.vectors.at(imax, j);
    if (std::abs(piv) > 0.0) {
      cplx ph = std::conj(piv) / std::abs(piv);
      for (int i = 0; i < n; ++i) ed.vectors.at(i, j) *= ph;
    }
  }
  return ed;
}

inline double spectral_norm(const HermitianMatrix& a) {
  EigenDecomposition ed = hermitian_eig(a);
  double m = 0.0;
  for (int i = 0; i < ed.n; ++i) m = std::max(m, std::abs(ed.values[static_cast<size_t>(i)]));
  return m;
}

// Re tr(a* b); real and symmetric in its arguments on hermitian inputs.
inline double frobenius_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix order mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::real(std::conj(a.at(i, j)) * b.at(i, j));
  return s;
}

// Determinant of the submatrix on rows/columns `idx` (strictly increasing,
// within range). Real for hermitian input.
inline double principal_minor(const HermitianMatrix& a, std::span<const int> idx) {
  int n = a.dim();
  int k = static_cast<int>(idx.size());
  if (k < 1 || k > n) throw std::invalid_argument("principal minor: bad index count");
  for (int i = 0; i < k; ++i) {
    if (idx[static_cast<size_t>(i)] < 0 || idx[static_cast<size_t>(i)] >= n)
      throw std::invalid_argument("principal minor: index out of range");
    if (i > 0 && idx[static_cast<size_t>(i)] <= idx[static_cast<size_t>(i - 1)])
      throw std::invalid_argument("principal minor: indices must be strictly increasing");
  }
  CMat sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  return std::real(det(sub));
}

// Number of eigenvalues with |lambda| > tol * max(1, ||a||_2).
inline int numerical_rank(const HermitianMatrix& a, double tol) {
  EigenDecomposition ed = hermitian_eig(a);
  double top = 0.0;
  for (int i = 0; i < ed.n; ++i) top = std::max(top, std::abs(ed.values[static_cast<size_t>(i)]));
  double thr = tol * std::max(1.0, top);
  int r = 0;
  for (int i = 0; i < ed.n; ++i)
    if (std::abs(ed.values[static_cast<size_t>(i)]) > thr) ++r;
  return r;
}

// [a, b] = ab - ba; anti-hermitian, returned as a general matrix.
inline CMat commutator(const HermitianMatrix& a, const HermitianMatrix& b) {
  return a.mat() * b.mat() - b.mat() * a.mat();
}

// Compression basis* A basis for an orthonormal column set.
inline HermitianMatrix compress(const HermitianMatrix& a, std::span<const CVec> basis) {
  int n = a.dim();
  int r = static_cast<int>(basis.size());
  if (r < 1 || r > n) throw std::invalid_argument("compress: bad basis size");
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      cplx g = cdot(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], n);
      double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - want) > 1e-8) throw std::invalid_argument("compress: basis not orthonormal");
    }
  CMat c(r);
  for (int j = 0; j < r; ++j) {
    CVec av = a.mat().apply(basis[static_cast<size_t>(j)]);
    for (int i = 0; i < r; ++i) c.at(i, j) = cdot(basis[static_cast<size_t>(i)], av, n);
  }
  return HermitianMatrix::from(c, 1e-6);
}

// Kronecker product of 2x2 blocks in the ordering |00>,|01>,|10>,|11>.
inline HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron: factors must be 2x2");
  CMat k(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) k.at(2 * i + p, 2 * j + q) = a.at(i, j) * b.at(p, q);
  return HermitianMatrix::from(k);
}

// Transpose on the second tensor factor: each 2x2 block of a 4x4 matrix is
// transposed in place. An involution that preserves hermiticity and trace.
inline HermitianMatrix partial_transpose(const HermitianMatrix& x) {
  if (x.dim() != 4) throw std::invalid_argument("partial transpose needs a 4x4 matrix");
  CMat r(4);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) r.at(2 * bi + p, 2 * bj + q) = x.at(2 * bi + q, 2 * bj + p);
  return HermitianMatrix::from(r);
}

// PSD, unit-trace state. validate() enforces both within tolerance.
struct DensityMatrix {
  HermitianMatrix rho;

  static DensityMatrix validate(const HermitianMatrix& h, double tol = 1e-8) {
    double tr = 0.0;
    for (int i = 0; i < h.dim(); ++i) tr += std::real(h.at(i, i));
    if (std::abs(tr - 1.0) > tol) throw std::invalid_argument("density matrix: trace != 1");
    EigenDecomposition ed = hermitian_eig(h);
    if (ed.values[0] < -tol) throw std::invalid_argument("density matrix: not positive semidefinite");
    return DensityMatrix{h};
  }

  static DensityMatrix pure(const CVec& psi, int n) {
    CVec v = psi;
    cnormalize(v, n);
    CMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
    return DensityMatrix{HermitianMatrix::from(m)};
  }
};

// Ordered triple of same-order hermitian matrices.
struct MatrixTriple {
  HermitianMatrix a1, a2, a3;

  MatrixTriple(HermitianMatrix x1, HermitianMatrix x2, HermitianMatrix x3)
      : a1(std::move(x1)), a2(std::move(x2)), a3(std::move(x3)) {
    if (a1.dim() != a2.dim() || a1.dim() != a3.dim())
      throw std::invalid_argument("matrix triple: mixed orders");
  }

  int dim() const { return a1.dim(); }

  HermitianMatrix pencil(const Vec3& u) const { return u[0] * a1 + u[1] * a2 + u[2] * a3; }

  double scale() const {
    return std::max({1.0, a1.fro_norm(), a2.fro_norm(), a3.fro_norm()});
  }
};

// Orthonormal basis of the traceless hermitian matrices of order n
// (generalized Gell-Mann set, deterministic order: symmetric pairs, then
// antisymmetric pairs interleaved, then diagonal members).
inline std::vector<HermitianMatrix> traceless_basis(int n) {
  std::vector<HermitianMatrix> out;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      HermitianMatrix x(n);
      x.set(k, l, cplx{inv_sqrt2, 0.0});
      out.push_back(x);
      HermitianMatrix y(n);
      y.set(k, l, cplx{0.0, -inv_sqrt2});
      out.push_back(y);
    }
  for (int m = 1; m < n; ++m) {
    HermitianMatrix d(n);
    double f = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int i = 0; i < m; ++i) d.set(i, i, f);
    d.set(m, m, -m * f);
    out.push_back(d);
  }
  return out;
}

}  // namespace jnr
