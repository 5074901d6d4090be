#include "skwv/record.hpp"

#include <stdexcept>

namespace skwv {

void SpacetimeRecord::append(const FieldState& s) {
  if (!times.empty() && !(s.t > times.back()))
    throw std::invalid_argument("SpacetimeRecord: times must be strictly increasing");
  if (s.u.size() != grid.n_cells || s.v.size() != grid.n_cells)
    throw std::invalid_argument("SpacetimeRecord: snapshot length mismatch");
  if (!s.all_finite())
    throw std::invalid_argument("SpacetimeRecord: snapshot contains non-finite values");
  times.push_back(s.t);
  u_snaps.push_back(s.u);
  v_snaps.push_back(s.v);
}

FieldState SpacetimeRecord::state_at_index(int k) const {
  if (k < 0 || k >= size()) throw std::out_of_range("SpacetimeRecord: bad snapshot index");
  FieldState s;
  s.t = times[k];
  s.u = u_snaps[k];
  s.v = v_snaps[k];
  s.grid = grid;
  s.model = model;
  s.boundary_value = boundary_value;
  return s;
}

}  // namespace skwv
