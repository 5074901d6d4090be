#pragma once

#include <utility>

#include "skwv/field_model.hpp"

namespace skwv {

/// Coefficient triple (a, b, c) of the multiplier a*u_t + b*u_r + c*u, as
/// functions of cone time tau and radius r, together with closed-form partial
/// derivatives and box_c = -c_tt + c_rr + (2/r) c_r.
///
/// Presets:
///   Energy   (1, 0, 0)
///   Scaling  (1, r/tau, 1/tau)
///   NullFull (1, 1, 1/r)
///   NullHalf (1, 1/2, 1/(2r))
class MultiplierTriple {
 public:
  enum class Preset { Energy, Scaling, NullFull, NullHalf };

  explicit MultiplierTriple(Preset p) : preset_(p) {}

  Preset preset() const { return preset_; }
  const char* name() const;

  /// True when the coefficients blow up as tau -> 0.
  bool tau_singular() const { return preset_ == Preset::Scaling; }

  /// lim_{r->0} (-c_r r^2)/2: the on-axis radial flux of the u^2 density.
  /// Nonzero for the 1/r-type multipliers; regions touching the axis pick up
  /// this weight times u(tau, 0)^2 unless the field vanishes there.
  double axis_weight() const;

  double a(double tau, double r) const;
  double b(double tau, double r) const;
  double c(double tau, double r) const;
  double a_t(double tau, double r) const;
  double a_r(double tau, double r) const;
  double b_t(double tau, double r) const;
  double b_r(double tau, double r) const;
  double c_t(double tau, double r) const;
  double c_r(double tau, double r) const;
  double box_c(double tau, double r) const;

 private:
  void check(double tau, double r) const;
  Preset preset_;
};

/// Bulk term I of the multiplier identity, evaluated on shell (the wave
/// operator acting on u replaced through the field equation):
///
///   I = (a_t/2 - d_r(b r^2)/(2r^2) + c) u_t^2 + (b_t - a_r) u_t u_r
///     + ((a_t - b_r)/2 + b/r - c) u_r^2
///     + (a_t + b_r) sin^2(u)/r^2
///     + (a_t + r^2 d_r(b/r^2)) w^2/(2 r^4)          [AdkinsNappi only]
///     + (box_c/2) u^2 - c u N(u, r)
///
/// u_t here is the derivative with respect to the same time coordinate tau
/// that the coefficients use.
double multiplier_bulk_I(const MultiplierTriple& m, ModelKind model, double tau, double r,
                         double u, double u_t, double u_r);

/// Outgoing-cone boundary density G = (a+b)/2 u_+^2 + (a-b) * potential.
double boundary_G(const MultiplierTriple& m, ModelKind model, double tau, double r,
                  double u_plus, double u);

/// Ingoing-cone boundary density H = (a-b)/2 u_-^2 + (a+b) * potential.
double boundary_H(const MultiplierTriple& m, ModelKind model, double tau, double r,
                  double u_minus, double u);

/// The u^2 boundary weights (w_C, w_K) = (c_r + c_t + c/r, c_r - c_t + c/r).
std::pair<double, double> c_boundary_weights(const MultiplierTriple& m, double tau, double r);

}  // namespace skwv
