// skwv: evolve equivariant wave-map / Adkins-Nappi fields on a radial grid,
// compute the static soliton, and run the local-energy identity suite.
//
// Subcommands: evolve, static, verify, concentrate, converge.
// Exit codes: 0 ok, 1 usage or I/O error, 2 singularity detected,
// 3 verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skwv/content_hash.hpp"
#include "skwv/csv.hpp"
#include "skwv/diagnostics.hpp"
#include "skwv/snapshot_io.hpp"
#include "skwv/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace skwv;

namespace {

constexpr const char* kConventionNote =
    "cone time tau = vertex - t; u_tau = -u_t; cone identities are evaluated in "
    "cone coordinates, where the reflected field solves the same equation";

struct CliOverrides {
  std::string config_path;
  std::string out_dir;
  std::optional<int> n_cells;
  std::optional<double> r_max, cfl, t_end, vertex;
  std::optional<std::string> model, data;
  std::optional<std::uint64_t> seed;
};

void add_common_flags(CLI::App* cmd, CliOverrides& ov) {
  cmd->add_option("--config", ov.config_path, "key=value config file");
  cmd->add_option("--out", ov.out_dir, "output directory");
  cmd->add_option("--n-cells", ov.n_cells, "grid cells");
  cmd->add_option("--r-max", ov.r_max, "outer radius");
  cmd->add_option("--cfl", ov.cfl, "CFL number dt/dr");
  cmd->add_option("--t-end", ov.t_end, "final time");
  cmd->add_option("--model", ov.model, "wavemap | adkins-nappi")
      ->check(CLI::IsMember({"wavemap", "adkins-nappi"}));
  cmd->add_option("--data", ov.data,
                  "stereographic | soliton | soliton-perturbed | pulse | zero | shatah");
  cmd->add_option("--vertex", ov.vertex, "vertex time for cone diagnostics");
  cmd->add_option("--seed", ov.seed, "seed for sampled checks");
}

RunConfig resolve_config(const CliOverrides& ov) {
  RunConfig cfg;
  if (!ov.config_path.empty()) cfg = parse_config_file(ov.config_path);
  if (!ov.out_dir.empty()) cfg.out_dir = ov.out_dir;
  if (ov.n_cells) cfg.n_cells = *ov.n_cells;
  if (ov.r_max) cfg.r_max = *ov.r_max;
  if (ov.cfl) cfg.cfl = *ov.cfl;
  if (ov.t_end) cfg.t_end = *ov.t_end;
  if (ov.model) cfg.model = *ov.model;
  if (ov.data) cfg.data = *ov.data;
  if (ov.vertex) cfg.vertex = *ov.vertex;
  if (ov.seed) cfg.seed = *ov.seed;
  return cfg;
}

json config_json(const RunConfig& cfg) {
  json j;
  std::istringstream in(cfg.canonical_text());
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) j[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return j;
}

std::string input_hash(const RunConfig& cfg, const FieldState& initial) {
  ContentHash h;
  h.feed(cfg.canonical_text()).feed(initial.u).feed(initial.v);
  return h.hex();
}

json singularity_json(const std::optional<SingularityEvent>& ev) {
  if (!ev) return nullptr;
  return json{{"time", ev->time}, {"radius", ev->radius}, {"trigger", trigger_name(ev->trigger)}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
}

DiagnosticSeries to_series(const char* label, const std::vector<double>& param,
                           const std::vector<double>& value) {
  DiagnosticSeries s;
  s.label = label;
  for (std::size_t i = 0; i < param.size(); ++i) s.points.emplace_back(param[i], value[i]);
  return s;
}

int cmd_evolve(const RunConfig& cfg) {
  const fs::path out = cfg.resolved_out_dir();
  fs::create_directories(out);

  RunArtifacts art = run_simulation(cfg);

  for (int k = 0; k < art.record.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "snap_%06d.skwv", k);
    write_snapshot((out / name).string(), art.record.state_at_index(k));
  }
  write_series_csv((out / "total_energy.csv").string(),
                   to_series("total_energy", art.report.snap_times, art.report.snap_energy));
  write_series_csv((out / "charge.csv").string(),
                   to_series("charge", art.report.snap_times, art.report.snap_charge));

  json summary;
  summary["config"] = config_json(cfg);
  summary["content_hash"] = input_hash(cfg, art.initial);
  summary["convention"] = kConventionNote;
  summary["run"] = {{"steps", art.report.step_count},
                    {"dt", art.report.dt},
                    {"final_time", art.report.final_state.t},
                    {"snapshots", art.record.size()},
                    {"singularity", singularity_json(art.report.singularity)}};
  summary["series"] = {{"time", art.report.snap_times},
                       {"total_energy", art.report.snap_energy},
                       {"charge", art.report.snap_charge}};
  write_text(out / "summary.json", summary.dump(2) + "\n");

  if (art.report.singularity) {
    const auto& ev = *art.report.singularity;
    std::printf("singularity detected: t = %.6g, r = %.6g, trigger = %s\n", ev.time, ev.radius,
                trigger_name(ev.trigger));
    return 2;
  }
  std::printf("evolved to t = %.6g in %ld steps; outputs in %s\n", art.report.final_state.t,
              art.report.step_count, out.string().c_str());
  return 0;
}

int cmd_static(const RunConfig& cfg) {
  const fs::path out = cfg.resolved_out_dir();
  fs::create_directories(out);

  const double dr = cfg.static_dr_or_default();
  SolitonProfile prof = find_soliton(cfg.a_lo, cfg.a_hi, cfg.r_max, dr, cfg.tol_a);
  write_profile_csv((out / "soliton_profile.csv").string(), prof);

  json summary;
  summary["config"] = config_json(cfg);
  summary["slope"] = prof.slope;
  summary["boundary_gap"] = prof.boundary_gap;
  summary["bisection_iterations"] = prof.bisection_iterations;
  summary["energy"] = soliton_energy(prof);
  summary["ode_residual"] = ode_residual(prof);

  std::printf("soliton: slope = %.12g, gap = %.3e, energy = %.10g, iterations = %d\n",
              prof.slope, prof.boundary_gap, soliton_energy(prof), prof.bisection_iterations);

  if (cfg.static_richardson) {
    json rows = json::array();
    double prev_slope = prof.slope;
    std::printf("%-12s %-18s %s\n", "dr", "slope", "|slope - prev|");
    std::printf("%-12.5e %-18.12g %s\n", dr, prof.slope, "-");
    rows.push_back({{"dr", dr}, {"slope", prof.slope}});
    for (int level = 1; level <= 2; ++level) {
      const double d = dr / (1 << level);
      SolitonProfile p = find_soliton(cfg.a_lo, cfg.a_hi, cfg.r_max, d, cfg.tol_a);
      std::printf("%-12.5e %-18.12g %.3e\n", d, p.slope, std::abs(p.slope - prev_slope));
      rows.push_back({{"dr", d}, {"slope", p.slope}, {"delta", std::abs(p.slope - prev_slope)}});
      prev_slope = p.slope;
    }
    summary["richardson"] = rows;
  }

  write_text(out / "static_summary.json", summary.dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& load_dir) {
  const fs::path out = cfg.resolved_out_dir();
  fs::create_directories(out);

  SpacetimeRecord rec;
  EvolveReport report;
  if (load_dir.empty()) {
    RunArtifacts art = run_simulation(cfg);
    rec = std::move(art.record);
    report = std::move(art.report);
  } else {
    rec = load_record_dir(load_dir);
    for (int k = 0; k < rec.size(); ++k) {
      const FieldState s = rec.state_at_index(k);
      report.snap_times.push_back(s.t);
      report.snap_energy.push_back(total_energy(s));
      report.snap_charge.push_back(topological_charge(s));
    }
    report.final_state = rec.state_at_index(rec.size() - 1);
  }

  const VerifyReport rep = run_identity_suite(rec, report, cfg);
  const std::string table = format_verify_table(rep);
  std::fputs(table.c_str(), stdout);

  json summary;
  summary["config"] = config_json(cfg);
  summary["convention"] = kConventionNote;
  summary["total_energy"] = rep.total_energy;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(
        {{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
  }
  summary["checks"] = checks;
  summary["all_pass"] = rep.all_pass();
  write_text(out / "verify.json", summary.dump(2) + "\n");

  return rep.all_pass() ? 0 : 3;
}

int cmd_concentrate(const RunConfig& cfg) {
  const fs::path out = cfg.resolved_out_dir();
  fs::create_directories(out);

  RunArtifacts art = run_simulation(cfg);
  const RecordSampler sampler(art.record, cfg.vertex_or_default());

  const double dr = art.record.grid.dr;
  const double t_hi = cfg.conc_t_hi > 0.0 ? cfg.conc_t_hi : 0.45 * sampler.tau_max();
  double t_lo = cfg.conc_t_lo > 0.0 ? cfg.conc_t_lo
                                    : std::max({t_hi / 16.0, sampler.tau_min() + 2.0 * dr,
                                                2.0 * dr});
  if (!(t_lo < t_hi))
    throw std::runtime_error("concentrate: empty cone-time window; adjust conc_t_lo/conc_t_hi");

  const DiagnosticSeries conc = concentration_series(sampler, t_hi, t_lo, cfg.conc_points);
  DiagnosticSeries weighted;
  weighted.label = "cone_weighted_energy";
  for (const auto& [T, unused] : conc.points) {
    (void)unused;
    weighted.points.emplace_back(T, cone_weighted_energy(sampler, T));
  }

  write_series_csv((out / "concentration.csv").string(), conc);
  write_series_csv((out / "cone_weighted_energy.csv").string(), weighted);
  write_series_csv((out / "sup_norm.csv").string(), sup_norm_series(art.record));

  json summary;
  summary["config"] = config_json(cfg);
  summary["content_hash"] = input_hash(cfg, art.initial);
  summary["convention"] = kConventionNote;
  summary["vertex"] = cfg.vertex_or_default();
  summary["window"] = {{"t_hi", t_hi}, {"t_lo", t_lo}, {"points", cfg.conc_points}};
  summary["total_energy"] = art.report.snap_energy.front();
  summary["singularity"] = singularity_json(art.report.singularity);
  write_text(out / "concentrate_summary.json", summary.dump(2) + "\n");

  std::printf("concentration series: %d points on T in [%.4g, %.4g]; outputs in %s\n",
              cfg.conc_points, t_lo, t_hi, out.string().c_str());
  return art.report.singularity ? 2 : 0;
}

int cmd_converge(const RunConfig& cfg, std::vector<int> levels) {
  const fs::path out = cfg.resolved_out_dir();
  fs::create_directories(out);
  if (levels.empty()) levels = {512, 1024, 2048};

  const std::vector<LadderRow> rows = convergence_ladder(cfg, levels);
  const auto presets = all_presets();

  std::printf("%-8s %-12s %-12s %-12s", "n", "drift", "flux(e)", "equiv");
  for (const auto& m : presets) std::printf(" %-12s", m.name());
  std::printf("\n");
  json jrows = json::array();
  for (const auto& row : rows) {
    std::printf("%-8d %-12.3e %-12.3e %-12.3e", row.n_cells, row.energy_drift, row.e_residual,
                row.equiv_residual);
    for (double v : row.int_residual) std::printf(" %-12.3e", v);
    std::printf("\n");
    jrows.push_back({{"n_cells", row.n_cells},
                     {"energy_drift", row.energy_drift},
                     {"flux_residual", row.e_residual},
                     {"equiv_residual", row.equiv_residual},
                     {"multiplier_residuals", row.int_residual}});
  }
  if (rows.size() >= 2) {
    std::printf("ratios (coarse/fine):\n");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const auto& a = rows[i];
      const auto& b = rows[i + 1];
      std::printf("%d -> %d: drift %.2f, flux %.2f, equiv %.2f\n", a.n_cells, b.n_cells,
                  a.energy_drift / std::max(b.energy_drift, 1e-300),
                  a.e_residual / std::max(b.e_residual, 1e-300),
                  a.equiv_residual / std::max(b.equiv_residual, 1e-300));
    }
  }

  json summary;
  summary["config"] = config_json(cfg);
  summary["rows"] = jrows;
  write_text(out / "converge.json", summary.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial wave-map / Adkins-Nappi laboratory"};
  app.require_subcommand(1);

  CliOverrides ov;
  std::string load_dir;
  std::vector<int> levels;

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "run an evolution and save the record");
  add_common_flags(evolve_cmd, ov);

  CLI::App* static_cmd = app.add_subcommand("static", "shoot for the static soliton profile");
  add_common_flags(static_cmd, ov);
  static_cmd->add_flag("--richardson", "repeat at dr/2 and dr/4 and report slope deltas");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  add_common_flags(verify_cmd, ov);
  verify_cmd->add_option("--load", load_dir, "verify a saved record directory");

  CLI::App* conc_cmd = app.add_subcommand("concentrate", "local-energy series toward a vertex");
  add_common_flags(conc_cmd, ov);

  CLI::App* conv_cmd = app.add_subcommand("converge", "grid-refinement residual ladder");
  add_common_flags(conv_cmd, ov);
  conv_cmd->add_option("--levels", levels, "grid sizes, e.g. --levels 512 1024 2048");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg = resolve_config(ov);
    if (static_cmd->parsed() && static_cmd->count("--richardson") > 0)
      cfg.static_richardson = true;

    if (evolve_cmd->parsed()) return cmd_evolve(cfg);
    if (static_cmd->parsed()) return cmd_static(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg, load_dir);
    if (conc_cmd->parsed()) return cmd_concentrate(cfg);
    if (conv_cmd->parsed()) return cmd_converge(cfg, levels);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
