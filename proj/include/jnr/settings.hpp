#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jnr {

// Central numeric configuration. Every tolerance used by the library lives
// here so that reports can echo the exact values a run was performed with.
struct Settings {
  // Constructor-level hermiticity enforcement: inputs with a larger relative
  // asymmetry ||X - X*|| / ||X|| are rejected instead of silently symmetrized.
  double hermiticity_rel_tol = 1e-9;

  // Eigensolver sweep convergence (off-diagonal Frobenius mass, relative).
  double eig_off_rel_tol = 1e-15;
  int eig_max_sweeps = 100;

  // Rank decisions: |lambda| > rank_rel_tol * max(1, ||A||_2) counts.
  double rank_rel_tol = 1e-8;

  // Eigenvalue cluster gap for multiplicity decisions, relative to
  // max(1, ||pencil||_2).
  double cluster_gap_tol = 1e-7;

  // Singular-value threshold for the affine dimension of a face (relative).
  double face_dim_rel_tol = 1e-7;

  // Spectral-gap descent acceptance: a minimum u is accepted as a rank-one
  // tuple (or a rank-two face) when gap(u) < tuple_accept_tol * scale.
  double tuple_accept_tol = 1e-8;

  // Principal-minor vanishing threshold: |minor| <= minor_tol * scale^k for
  // an order-k minor.
  double minor_tol = 1e-6;

  // Angular deduplication distance for detected directions.
  double dedup_angle = 1e-4;

  // Convex hull coplanarity tolerance, relative to the point-cloud diameter.
  double hull_coplanar_rel = 1e-9;

  // Algebraic conic fit acceptance for elliptic faces (relative residual).
  double ellipse_fit_tol = 1e-6;

  // Unitary irreducibility: k-th leading minor of the Gram matrix must
  // exceed irreducibility_tol * ||S||^k.
  double irreducibility_tol = 1e-10;

  // Eigenvalue coincidence test in the elliptic classification formula.
  // Defective spectra (circular disks) perturb their roots by O(eps^(1/3)),
  // about 5e-6 in double precision, so the gate sits above that floor.
  double ellipse_eig_match_tol = 2e-5;

  // Droplet vs ellipse: the split-off point counts as inside the ellipse when
  // within this relative margin of the boundary (boundary cases -> ellipse).
  double droplet_boundary_tol = 1e-8;

  // Corner detection: a probe direction supports p when the support value is
  // within corner_support_tol * scale of <p,u>; the normal cone dimension is
  // the rank of the collected directions at corner_rank_tol.
  double corner_support_tol = 1e-6;
  double corner_rank_tol = 1e-4;
  int corner_probes = 2000;

  // Sphere search budgets.
  int search_grid = 512;    // refinement starts (scan uses 4x this)
  int nm_max_iter = 200;    // Nelder-Mead iterations per stage

  // Separable-range solvers.
  int seesaw_restarts = 32;
  int seesaw_max_iter = 500;
  double seesaw_converge = 1e-12;
  double barrier_mu_start = 1.0;
  double barrier_mu_min = 1e-10;
  double barrier_mu_shrink = 0.25;
  double barrier_newton_tol = 1e-9;
  int barrier_max_newton = 64;

  // Segment-probe heuristics over boundary meshes.
  double probe_normal_cluster = 1e-3;  // radians
  double probe_area_fraction = 0.01;
  double probe_aspect = 5.0;

  // Boundary sampling default.
  int boundary_dirs = 1000;
};

// Diagnostic events surfaced in reports. "falsification" marks a numerically
// contradicted structural claim; "warning" marks borderline numerics.
struct Event {
  enum class Severity { warning, falsification };
  Severity severity = Severity::warning;
  std::string claim;    // stable identifier of the property being tested
  std::string message;  // human-readable details
};

inline void push_event(std::vector<Event>* sink, Event::Severity sev, std::string claim,
                       std::string message) {
  if (sink) sink->push_back(Event{sev, std::move(claim), std::move(message)});
}

}  // namespace jnr
