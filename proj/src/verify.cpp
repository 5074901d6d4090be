#include "skwv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace skwv {

RunArtifacts run_simulation(const RunConfig& cfg) {
  RunArtifacts art;
  const GridSpec grid = make_grid(cfg.r_max, cfg.n_cells);
  const InitialDataKind kind = cfg.data_kind();

  const Eigen::ArrayXd* prof_r = nullptr;
  const Eigen::ArrayXd* prof_u = nullptr;
  if (kind == InitialDataKind::Soliton || kind == InitialDataKind::SolitonPerturbed) {
    art.profile = find_soliton(cfg.a_lo, cfg.a_hi, cfg.r_max, cfg.static_dr_or_default(),
                               cfg.tol_a);
    art.has_profile = true;
    prof_r = &art.profile.r;
    prof_u = &art.profile.u;
  }

  art.initial = make_initial_state(kind, cfg.data_params(), grid, cfg.model_kind(), prof_r,
                                   prof_u);
  EvolveOptions opts;
  opts.t_end = cfg.t_end;
  opts.cfl = cfg.cfl;
  opts.record_every = cfg.record_every;
  opts.thresholds = cfg.thresholds();
  auto [report, record] = evolve(art.initial, opts);
  art.report = std::move(report);
  art.record = std::move(record);
  return art;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

double positivity_min(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) worst = std::min(worst, positivity_term(dist(rng)));
  return worst;
}

std::array<MultiplierTriple, 4> all_presets() {
  using P = MultiplierTriple::Preset;
  return {MultiplierTriple(P::Energy), MultiplierTriple(P::Scaling),
          MultiplierTriple(P::NullFull), MultiplierTriple(P::NullHalf)};
}

VerifyReport run_identity_suite(const SpacetimeRecord& rec, const EvolveReport& report,
                                const RunConfig& cfg) {
  VerifyReport out;
  const double e_tot = report.snap_energy.empty() ? 0.0 : report.snap_energy.front();
  out.total_energy = e_tot;
  const double scale = std::max(e_tot, 1e-30);

  const auto add = [&](const std::string& name, double value, double threshold) {
    out.checks.push_back({name, value, threshold, value <= threshold});
  };

  double drift = 0.0;
  for (double e : report.snap_energy) drift = std::max(drift, std::abs(e - e_tot));
  add("energy drift (rel)", drift / std::max(e_tot, 1.0), 1e-4);

  const RecordSampler sampler(rec, cfg.vertex_or_default());
  const double t0 = cfg.t0, t1 = cfg.t1;
  if (cfg.vertex_or_default() - 2.0 * t1 < rec.times.front() - 1e-12 ||
      cfg.vertex_or_default() - t0 > rec.times.back() + 1e-12) {
    throw std::out_of_range(
        "identity window does not fit the record: need vertex - 2*t1 and vertex - t0 "
        "inside the recorded times (adjust t0/t1/vertex)");
  }

  add("flux identity (rel)", flux_identity_residual(sampler, t0, t1) / scale,
      cfg.verify_tol());

  const double ball_based = std::abs(local_energy(sampler, t1) - local_energy(sampler, t0) -
                                     flux(sampler, t0, t1));
  add("flux identity, ball-side (rel)", ball_based / scale, cfg.verify_tol());

  const double equiv =
      std::max(std::abs(cone_energy(sampler, t1) - local_energy(sampler, t1)),
               std::abs(cone_energy(sampler, t0) - local_energy(sampler, t0)));
  add("ball-vs-cone equality (rel)", equiv / scale, cfg.verify_tol());

  for (const MultiplierTriple& m : all_presets()) {
    add(std::string("multiplier identity ") + m.name() + " (rel)",
        multiplier_identity_residual(sampler, t0, t1, m) / scale, cfg.verify_tol());
  }

  const int gh_bad =
      gh_bounds_report(sampler, MultiplierTriple(MultiplierTriple::Preset::Scaling),
                       cfg.gh_samples, cfg.seed, t0, t1);
  add("cone inequality violations (scaling)", static_cast<double>(gh_bad), 0.0);

  add("positivity min over 1e6 samples", -positivity_min(1000000, cfg.seed), 1e-18);

  double charge_drift = 0.0;
  const double q0 = report.snap_charge.empty() ? 0.0 : report.snap_charge.front();
  for (double q : report.snap_charge) charge_drift = std::max(charge_drift, std::abs(q - q0));
  add("charge drift", charge_drift, 1e-12);

  return out;
}

std::vector<LadderRow> convergence_ladder(const RunConfig& base, const std::vector<int>& ns) {
  std::vector<LadderRow> rows;
  for (int n : ns) {
    RunConfig cfg = base;
    cfg.n_cells = n;
    RunArtifacts art = run_simulation(cfg);

    LadderRow row;
    row.n_cells = n;
    const double e0 = art.report.snap_energy.front();
    double drift = 0.0;
    for (double e : art.report.snap_energy) drift = std::max(drift, std::abs(e - e0));
    row.energy_drift = drift / std::max(e0, 1.0);

    const RecordSampler sampler(art.record, cfg.vertex_or_default());
    const double scale = std::max(e0, 1e-30);
    row.e_residual = flux_identity_residual(sampler, cfg.t0, cfg.t1) / scale;
    row.equiv_residual =
        std::abs(cone_energy(sampler, cfg.t1) - local_energy(sampler, cfg.t1)) / scale;
    const auto presets = all_presets();
    for (std::size_t i = 0; i < presets.size(); ++i) {
      row.int_residual[i] =
          multiplier_identity_residual(sampler, cfg.t0, cfg.t1, presets[i]) / scale;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_verify_table(const VerifyReport& rep) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-44s %-13s %-13s %s\n", "check", "value", "threshold",
                "status");
  os << buf;
  for (const auto& c : rep.checks) {
    std::snprintf(buf, sizeof buf, "%-44s %-13.3e %-13.3e %s\n", c.name.c_str(), c.value,
                  c.threshold, c.pass ? "PASS" : "FAIL");
    os << buf;
  }
  return os.str();
}

}  // namespace skwv
