#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "skwv/field_state.hpp"
#include "skwv/record.hpp"

namespace skwv {

/// Optional source term added to the u_t equation; used by manufactured
/// solution runs. Signature: F(t, r).
using ForcingFn = std::function<double(double, double)>;

/// u_r at the nodes: second-order centered differences in the interior and
/// one-sided second-order stencils at the two end nodes (no symmetry
/// assumption at the center, so profiles approaching any multiple of pi
/// at r = 0 are handled alike).
Eigen::ArrayXd spatial_gradient(const FieldState& s);

/// Right-hand side of the first-order system: du = v,
/// dv = (1/r^2) d_r(r^2 u_r) - N(u, r) + forcing, with the radial Laplacian
/// in conservative face-flux form. The flux through the r = 0 face vanishes
/// with the face area; the outer face uses a Dirichlet ghost value
/// 2*boundary_value - u_{n-1}, which pins the face value exactly.
std::pair<Eigen::ArrayXd, Eigen::ArrayXd> rhs(const FieldState& s,
                                              const ForcingFn& forcing = nullptr);

/// Classical fourth-order Runge-Kutta step of size dt.
FieldState step_rk4(const FieldState& s, double dt, const ForcingFn& forcing = nullptr);

/// Total energy of the state over the whole grid, in the face-gradient form
///   sum_j [v_j^2/2 + potential(u_j)] r_j^2 dr
///   + sum_faces r_f^2 g_f^2/2 dr + r_max^2 g_outer^2/4 dr,
/// which the semidiscrete flow conserves exactly; drift therefore measures
/// the time integrator alone.
double total_energy(const FieldState& s);

struct Thresholds {
  double energy_density = 1e8;
  double gradient = 1e6;
};

enum class SingularityTrigger { NonFinite, EnergyDensity, Gradient };

struct SingularityEvent {
  double time = 0.0;
  double radius = 0.0;
  SingularityTrigger trigger = SingularityTrigger::NonFinite;
};

const char* trigger_name(SingularityTrigger t);

/// Per-snapshot observer; receives the state each time it is recorded.
using SnapshotCallback = std::function<void(const FieldState&)>;

struct EvolveOptions {
  double t_end = 5.0;
  double cfl = 0.4;
  int record_every = 2;
  Thresholds thresholds;
  ForcingFn forcing = nullptr;
  SnapshotCallback on_snapshot = nullptr;
};

struct EvolveReport {
  FieldState final_state;
  long step_count = 0;
  double dt = 0.0;
  std::optional<SingularityEvent> singularity;
  // Observables sampled at every recorded snapshot.
  std::vector<double> snap_times;
  std::vector<double> snap_energy;
  std::vector<double> snap_charge;
};

/// Fixed-step RK4 evolution from initial.t to t_end. The step is
/// dt = (t_end - initial.t)/n with n the smallest multiple of record_every
/// for which dt <= cfl*dr, so recorded snapshots (first, every
/// record_every-th step, last) have exactly uniform cadence.
///
/// A detected singularity (non-finite value, energy density or gradient
/// beyond threshold) halts the run early and is a normal result; the last
/// finite state is appended to the record.
std::pair<EvolveReport, SpacetimeRecord> evolve(const FieldState& initial,
                                                const EvolveOptions& opts);

/// Shipped initial-data families.
enum class InitialDataKind { Zero, Stereographic, Soliton, SolitonPerturbed, Pulse, Shatah };

struct InitialDataParams {
  double lambda = 1.0;       // stereographic scale
  double pulse_amp = 1.0;    // degree-0 pulse; the ingoing half crosses the
  double pulse_r0 = 3.5;     // default diagnostic cone around the origin
  double pulse_sigma = 0.5;
  double perturb_amp = 0.01;  // bump added to the soliton profile
  double perturb_r0 = 3.0;
  double perturb_sigma = 0.5;
  double shatah_tau0 = 1.0;  // start distance from the vertex
};

/// Smooth compactly supported bump: exp(1 - 1/(1-x^2)) for |x|<1, else 0.
double bump_window(double x);

/// C^2 blend weight rising 0 -> 1 over [x0, x1].
double smoothstep_blend(double r, double x0, double x1);

InitialDataKind parse_initial_data_kind(const std::string& name);
const char* initial_data_name(InitialDataKind k);

/// Builds initial data on the grid. Families with u(infinity) = pi are
/// blended to exactly pi over [0.7, 0.9] r_max so the pinned boundary value
/// is an exact multiple of pi and the winding number is 1 to roundoff; the
/// blend sits in the causal buffer of every shipped diagnostic window.
/// The Soliton families take the precomputed profile as (r, u) arrays.
FieldState make_initial_state(InitialDataKind kind, const InitialDataParams& params,
                              const GridSpec& grid, ModelKind model,
                              const Eigen::ArrayXd* soliton_r = nullptr,
                              const Eigen::ArrayXd* soliton_u = nullptr);

}  // namespace skwv
