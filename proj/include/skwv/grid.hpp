#pragma once

#include <Eigen/Core>

namespace skwv {

/// Uniform staggered radial grid. Nodes sit at cell centers r_j = (j+1/2)*dr,
/// so no node lands on the coordinate singularity at r = 0 and the innermost
/// cell face carries zero area flux.
struct GridSpec {
  double r_max = 0.0;
  int n_cells = 0;
  double dr = 0.0;

  double node(int j) const { return (j + 0.5) * dr; }
  Eigen::ArrayXd nodes() const;
  /// Cell face radius r_{j-1/2} = j*dr (face 0 is the origin).
  double face(int j) const { return j * dr; }
};

/// Builds a staggered grid with spacing dr = r_max/n_cells.
/// Throws std::invalid_argument for r_max <= 0 or n_cells < 8.
GridSpec make_grid(double r_max, int n_cells);

}  // namespace skwv
