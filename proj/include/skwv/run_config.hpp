#pragma once

#include <cstdint>
#include <string>

#include "skwv/evolver.hpp"

namespace skwv {

/// Plain key=value run configuration. Every key has a default; unknown keys
/// are rejected. CLI flags override file values; the SKWV_OUT environment
/// variable overrides only the built-in default output directory.
struct RunConfig {
  std::string model = "adkins-nappi";
  std::string data = "pulse";
  double r_max = 20.0;
  int n_cells = 1024;
  double cfl = 0.4;
  double t_end = 5.0;
  int record_every = 2;
  double threshold_energy = 1e8;
  double threshold_gradient = 1e6;
  double vertex = -1.0;  // <= 0 means "use t_end"
  std::string out_dir;   // empty means SKWV_OUT or "./out"
  std::uint64_t seed = 12345;

  // initial data parameters
  double lambda = 1.0;
  double pulse_amp = 1.0;
  double pulse_r0 = 3.5;
  double pulse_sigma = 0.5;
  double perturb_amp = 0.01;
  double perturb_r0 = 3.0;
  double perturb_sigma = 0.5;
  double shatah_tau0 = 1.0;

  // identity-check region and thresholds (verify)
  double t0 = 1.0;
  double t1 = 2.0;
  int gh_samples = 100000;
  double verify_tol_rel = -1.0;  // <= 0 means 1e-3 * (2048/n_cells)^2

  // static profile solver
  double a_lo = 0.5;
  double a_hi = 20.0;
  double static_dr = -1.0;  // <= 0 means r_max / n_cells
  double tol_a = 1e-12;
  bool static_richardson = false;

  // concentration series
  double conc_t_hi = -1.0;  // <= 0 means 0.4 * t_end
  double conc_t_lo = -1.0;  // <= 0 means conc_t_hi / 16
  int conc_points = 24;

  double vertex_or_default() const { return vertex > 0.0 ? vertex : t_end; }
  /// Identity-residual bar: explicit value, or the order-two bar 1e-3 at
  /// n = 2048 rescaled by (2048/n)^2 for other resolutions.
  double verify_tol() const {
    if (verify_tol_rel > 0.0) return verify_tol_rel;
    const double q = 2048.0 / n_cells;
    return 1e-3 * q * q;
  }
  double static_dr_or_default() const { return static_dr > 0.0 ? static_dr : r_max / n_cells; }

  ModelKind model_kind() const;
  InitialDataKind data_kind() const;
  Thresholds thresholds() const { return {threshold_energy, threshold_gradient}; }
  InitialDataParams data_params() const;

  /// Applies one key=value assignment; throws std::invalid_argument for
  /// unknown keys or unparseable values.
  void set(const std::string& key, const std::string& value);

  /// Resolved output directory (flag > config > SKWV_OUT > "out").
  std::string resolved_out_dir() const;

  /// Canonical key=value rendering of every field (used for echo/hashing).
  std::string canonical_text() const;
};

/// Parses a config file; '#' starts a comment, blank lines are skipped.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace skwv
