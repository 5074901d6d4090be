#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "skwv/field_state.hpp"

namespace skwv {

/// Time-stamped solution history on a fixed grid. Snapshots from a smooth run
/// have uniform cadence; a run stopped by the singularity monitor may append
/// one off-cadence final snapshot.
struct SpacetimeRecord {
  GridSpec grid;
  ModelKind model = ModelKind::AdkinsNappi;
  double boundary_value = 0.0;
  std::vector<double> times;
  std::vector<Eigen::ArrayXd> u_snaps;
  std::vector<Eigen::ArrayXd> v_snaps;

  int size() const { return static_cast<int>(times.size()); }
  void append(const FieldState& s);
  FieldState state_at_index(int k) const;
};

/// Labeled series of (parameter, value) points with strictly monotone
/// parameters; written out as two-column CSV.
struct DiagnosticSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

}  // namespace skwv
