#pragma once

#include <cstdint>
#include <vector>

#include "skwv/cone_region.hpp"
#include "skwv/multiplier.hpp"
#include "skwv/record.hpp"

namespace skwv {

/// Read-only interpolating view of a record, in cone coordinates
/// tau = vertex_time - t_sim (tau decreases to 0 at the vertex as the
/// simulation runs forward). Since the equation is invariant under time
/// reflection, the reflected field solves it in tau, and every cone-time
/// identity applies verbatim with u_tau = -u_t.
///
/// Sampling is bilinear: linear in time between snapshots and linear in r
/// between nodes, with odd extension of u, v (even for u_r) below the first
/// node. Gradients of recorded snapshots are cached on construction.
class RecordSampler {
 public:
  RecordSampler(const SpacetimeRecord& rec, double vertex_time);
  RecordSampler(SpacetimeRecord&&, double) = delete;  // the view must not outlive the record

  struct Sample {
    double u;
    double u_tau;
    double u_r;
  };

  Sample at(double tau, double r) const;
  double u_at(double tau, double r) const { return at(tau, r).u; }
  /// Field value on the axis r = 0 (linear extrapolation from the first two
  /// nodes, then linear in time).
  double u_at_axis(double tau) const;

  double vertex_time() const { return vertex_time_; }
  const SpacetimeRecord& record() const { return rec_; }
  ModelKind model() const { return rec_.model; }
  double dr() const { return rec_.grid.dr; }

  /// Largest cone time with a recorded slice (vertex_time - last snapshot).
  double tau_min() const;
  /// Cone time of the first snapshot.
  double tau_max() const;

 private:
  const SpacetimeRecord& rec_;
  double vertex_time_;
  std::vector<Eigen::ArrayXd> ur_snaps_;

  int bracket(double t_sim) const;
  double interp_radial(const Eigen::ArrayXd& arr, double r) const;
};

/// Energy in the ball r <= R at simulation time t_sim (midpoint quadrature of
/// the energy density times r^2, step = dr).
double ball_energy(const SpacetimeRecord& rec, double t_sim, double R);

/// Vertex-centered local energy: the ball of radius T at cone time T.
double local_energy(const RecordSampler& s, double T);

/// The same local energy evaluated on the ingoing cone through (T, 0..T):
/// integral over r in [0,T] of [u_minus^2/2 + potential] r^2 dr along
/// tau = 2T - r. Equals local_energy(T) for exact solutions.
double cone_energy(const RecordSampler& s, double T);

/// Energy flux through the outgoing cone tau = r between cone times t0 < t1.
double flux(const RecordSampler& s, double t0, double t1);

/// Ball-slice functional with the (1 - r/T) null weight:
/// integral over r <= T of [(1-r/T)u_-^2 + u_+^2 + sin^2u/r^2 + w^2/r^4] r^2 dr.
double weighted_local_energy(const RecordSampler& s, double T);

/// Ingoing-cone functional [(1 - r/tau)u_-^2 + sin^2u/r^2 + w^2/r^4]
/// integrated along tau = 2T - r.
double cone_weighted_energy(const RecordSampler& s, double T);

/// Area integral of the multiplier bulk term I over the band between the
/// ingoing cones at t0, t1 and the outgoing cone (integrand I * r^2 dr dtau).
double bulk_I_integral(const RecordSampler& s, double t0, double t1,
                       const MultiplierTriple& m);

/// Absolute residual of the integrated multiplier identity on the band
/// D(t0,t1): bulk + outgoing-cone boundary + vertex-corner terms minus the
/// difference of ingoing-cone boundary integrals. Zero for exact solutions;
/// the Energy preset reduces it to the flux identity E(t1)-E(t0)=F(t0,t1)
/// with cone-side local energies.
double multiplier_identity_residual(const RecordSampler& s, double t0, double t1,
                                    const MultiplierTriple& m);

/// Flux-identity residual, by definition the Energy-preset multiplier
/// residual (bitwise the same computation).
double flux_identity_residual(const RecordSampler& s, double t0, double t1);

/// Local energy at cone time T over the ball of radius T, for a geometric
/// ladder of n_points times from T_hi down to T_lo.
DiagnosticSeries concentration_series(const RecordSampler& s, double T_hi, double T_lo,
                                      int n_points);

/// t -> max_j |u_j| over the recorded snapshots.
DiagnosticSeries sup_norm_series(const SpacetimeRecord& rec);

/// Samples n points (tau, r) with r <= tau inside the cone and counts
/// violations (beyond 1e-12 slack) of the pointwise bounds
///   0 <= G <= 2*flux_density,  0 <= H <= 2*(u_-^2/2 + potential),
///   |w_C| <= 2/r^2,            0 <= w_K <= 2/r^2.
int gh_bounds_report(const RecordSampler& s, const MultiplierTriple& m, int n_samples,
                     std::uint64_t seed, double tau_lo, double tau_hi);

}  // namespace skwv
