#pragma once

#include <functional>

#include "skwv/field_state.hpp"

namespace skwv {

/// The self-similar degree-collapsing wave map u = 2 arctan(tau/r), smooth
/// for tau > 0 with u(tau, 0+) = pi, u -> 0 pointwise as tau -> 0 while the
/// gradient blows up at the vertex. It solves the wave-map equation only;
/// the quartic repulsion breaks it, so never pair it with AdkinsNappi.
double shatah_u(double tau, double r);
double shatah_u_tau(double tau, double r);  // 2r/(tau^2 + r^2)
double shatah_u_r(double tau, double r);    // -2tau/(tau^2 + r^2)

/// Ambient sphere components of the equivariant angle.
double shatah_sin_u(double tau, double r);  // 2 tau r/(tau^2 + r^2)
double shatah_cos_u(double tau, double r);  // (r^2 - tau^2)/(tau^2 + r^2)

/// Samples (u, u_tau) on the grid at cone time tau; a valid WaveMap state.
FieldState shatah_state(double tau, const GridSpec& grid);

/// Manufactured solution u_m(t, r) = sin(t) r exp(-r^2) and the closed-form
/// forcing that makes it solve the forced equation for the given model:
/// F = u_tt - u_rr - (2/r) u_r + N(u_m, r).
double manufactured_u(double t, double r);
double manufactured_u_t(double t, double r);
double manufactured_forcing(ModelKind model, double t, double r);

/// Closed-form reference solutions for validation.
struct ExactSolution {
  enum class Kind { ShatahSelfSimilar, Vacuum, LinearRadialPulse, Manufactured };

  Kind kind;
  std::function<double(double, double)> u;    // (t, r)
  std::function<double(double, double)> u_t;  // (t, r)

  static ExactSolution shatah();
  static ExactSolution vacuum();
  /// d'Alembert solution of the radial linear wave equation (no
  /// nonlinearity) for data u(0, r) = u0(r), u_t(0, r) = 0: r u solves the
  /// 1-d wave equation with odd extension.
  static ExactSolution linear_radial_pulse(std::function<double(double)> u0);
  static ExactSolution manufactured();
};

}  // namespace skwv
