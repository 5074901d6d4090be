#pragma once

#include <string>

#include "skwv/field_state.hpp"
#include "skwv/record.hpp"

namespace skwv {

/// Binary snapshot format, magic "SKWV1\n":
///   line 1  magic
///   line 2  n_cells (decimal)
///   line 3  r_max   (decimal, 17 significant digits)
///   line 4  time    (decimal, 17 significant digits)
///   line 5  model id (0 = wavemap, 1 = adkins-nappi)
/// followed by 2*n_cells little-endian IEEE-754 doubles (u, then v).
/// Round-trips bit-exactly.
void write_snapshot(const std::string& path, const FieldState& s);

/// Throws std::runtime_error on missing file, bad magic, or short payload.
FieldState read_snapshot(const std::string& path);

/// Reads every *.skwv file in a directory into a record ordered by time;
/// all snapshots must share the grid and model.
SpacetimeRecord load_record_dir(const std::string& dir);

}  // namespace skwv
