#pragma once

#include <Eigen/Core>

#include "skwv/field_model.hpp"
#include "skwv/grid.hpp"

namespace skwv {

/// Field and its time derivative sampled on the staggered grid at time t.
/// boundary_value is the Dirichlet value pinned at the outer face r = r_max;
/// it never changes during evolution.
struct FieldState {
  double t = 0.0;
  Eigen::ArrayXd u;
  Eigen::ArrayXd v;
  GridSpec grid;
  ModelKind model = ModelKind::AdkinsNappi;
  double boundary_value = 0.0;

  bool all_finite() const { return u.allFinite() && v.allFinite(); }
};

/// Linear extrapolation of nodal values to the outer face at r_max.
inline double extrapolate_to_outer_face(const Eigen::ArrayXd& u) {
  const Eigen::Index n = u.size();
  return 1.5 * u[n - 1] - 0.5 * u[n - 2];
}

/// Winding number from the pinned boundary value, normalized so that
/// u(0) = 0, u(r_max) = pi gives charge 1.
inline double topological_charge(const FieldState& s) {
  return u_minus_sincos(s.boundary_value) / std::numbers::pi;
}

}  // namespace skwv
