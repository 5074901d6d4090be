#pragma once

#include <array>
#include <string>
#include <vector>

#include "skwv/diagnostics.hpp"
#include "skwv/run_config.hpp"
#include "skwv/static_soliton.hpp"

namespace skwv {

/// Everything produced by one configured run.
struct RunArtifacts {
  FieldState initial;
  EvolveReport report;
  SpacetimeRecord record;
  // Filled only for the soliton data families.
  bool has_profile = false;
  SolitonProfile profile;
};

/// Builds initial data (shooting for the soliton families) and evolves it.
RunArtifacts run_simulation(const RunConfig& cfg);

struct IdentityCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;  // value <= threshold
};

struct VerifyReport {
  std::vector<IdentityCheck> checks;
  double total_energy = 0.0;
  bool all_pass() const;
};

/// The full identity suite on a record: energy drift, flux identity,
/// ball-vs-cone equality, the multiplier identity for all four presets,
/// cone inequalities, positivity sampling, and charge conservation.
/// Residuals are reported relative to the run's total energy.
VerifyReport run_identity_suite(const SpacetimeRecord& rec, const EvolveReport& report,
                                const RunConfig& cfg);

/// Minimum of positivity_term over n seeded uniform samples in [-20, 20].
double positivity_min(int n, std::uint64_t seed);

std::array<MultiplierTriple, 4> all_presets();

struct LadderRow {
  int n_cells = 0;
  double energy_drift = 0.0;  // relative
  double e_residual = 0.0;    // relative to total energy
  double equiv_residual = 0.0;
  std::array<double, 4> int_residual{};  // same order as all_presets()
};

/// Runs the configured problem at each resolution and evaluates the identity
/// residuals on [t0, t1] around the configured vertex.
std::vector<LadderRow> convergence_ladder(const RunConfig& base, const std::vector<int>& ns);

/// Formats the suite as an aligned pass/fail table.
std::string format_verify_table(const VerifyReport& rep);

}  // namespace skwv
