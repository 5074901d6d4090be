#include "skwv/grid.hpp"

#include <stdexcept>

namespace skwv {

Eigen::ArrayXd GridSpec::nodes() const {
  Eigen::ArrayXd r(n_cells);
  for (int j = 0; j < n_cells; ++j) r[j] = node(j);
  return r;
}

GridSpec make_grid(double r_max, int n_cells) {
  if (!(r_max > 0.0)) throw std::invalid_argument("make_grid: r_max must be positive");
  if (n_cells < 8) throw std::invalid_argument("make_grid: n_cells must be at least 8");
  GridSpec g;
  g.r_max = r_max;
  g.n_cells = n_cells;
  g.dr = r_max / n_cells;
  return g;
}

}  // namespace skwv
