#pragma once

#include <string>

#include "skwv/record.hpp"
#include "skwv/static_soliton.hpp"

namespace skwv {

/// Two-column CSV with header line "param,value", 17-significant-digit floats.
void write_series_csv(const std::string& path, const DiagnosticSeries& series);

/// Profile CSV: comment header recording slope, dr, r_max and boundary gap,
/// then "r,u" rows.
void write_profile_csv(const std::string& path, const SolitonProfile& profile);

}  // namespace skwv
