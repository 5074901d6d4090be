#include "skwv/evolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skwv {

Eigen::ArrayXd spatial_gradient(const FieldState& s) {
  const int n = s.grid.n_cells;
  const double dr = s.grid.dr;
  const Eigen::ArrayXd& u = s.u;
  Eigen::ArrayXd g(n);
  g.segment(1, n - 2) = (u.tail(n - 2) - u.head(n - 2)) / (2.0 * dr);
  g[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dr);
  g[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * dr);
  return g;
}

namespace {

// (1/r^2) d_r(r^2 u_r) via face fluxes, minus the nonlinearity, plus forcing.
Eigen::ArrayXd acceleration(const Eigen::ArrayXd& u, const GridSpec& grid, ModelKind model,
                            double boundary_value, double t, const ForcingFn& forcing) {
  const int n = grid.n_cells;
  const double dr = grid.dr;

  // Face gradients f = 1..n-1 between interior node pairs; the r = 0 face
  // carries no flux, the outer face uses the Dirichlet ghost 2*bc - u_last.
  Eigen::ArrayXd flux(n + 1);
  flux[0] = 0.0;
  for (int f = 1; f < n; ++f) {
    const double rf = grid.face(f);
    flux[f] = rf * rf * (u[f] - u[f - 1]) / dr;
  }
  const double g_outer = 2.0 * (boundary_value - u[n - 1]) / dr;
  flux[n] = grid.r_max * grid.r_max * g_outer;

  Eigen::ArrayXd dv(n);
  for (int j = 0; j < n; ++j) {
    const double r = grid.node(j);
    dv[j] = (flux[j + 1] - flux[j]) / (r * r * dr) - nonlinearity(model, u[j], r);
  }
  if (forcing) {
    for (int j = 0; j < n; ++j) dv[j] += forcing(t, grid.node(j));
  }
  return dv;
}

}  // namespace

std::pair<Eigen::ArrayXd, Eigen::ArrayXd> rhs(const FieldState& s, const ForcingFn& forcing) {
  return {s.v, acceleration(s.u, s.grid, s.model, s.boundary_value, s.t, forcing)};
}

FieldState step_rk4(const FieldState& s, double dt, const ForcingFn& forcing) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
  const auto acc = [&](const Eigen::ArrayXd& u, double t) {
    return acceleration(u, s.grid, s.model, s.boundary_value, t, forcing);
  };

  const Eigen::ArrayXd& k1u = s.v;
  const Eigen::ArrayXd k1v = acc(s.u, s.t);

  const Eigen::ArrayXd k2u = s.v + 0.5 * dt * k1v;
  const Eigen::ArrayXd k2v = acc(s.u + 0.5 * dt * k1u, s.t + 0.5 * dt);

  const Eigen::ArrayXd k3u = s.v + 0.5 * dt * k2v;
  const Eigen::ArrayXd k3v = acc(s.u + 0.5 * dt * k2u, s.t + 0.5 * dt);

  const Eigen::ArrayXd k4u = s.v + dt * k3v;
  const Eigen::ArrayXd k4v = acc(s.u + dt * k3u, s.t + dt);

  FieldState out = s;
  out.t = s.t + dt;
  out.u = s.u + (dt / 6.0) * (k1u + 2.0 * (k2u + k3u) + k4u);
  out.v = s.v + (dt / 6.0) * (k1v + 2.0 * (k2v + k3v) + k4v);
  return out;
}

double total_energy(const FieldState& s) {
  const int n = s.grid.n_cells;
  const double dr = s.grid.dr;
  double e = 0.0;
  for (int j = 0; j < n; ++j) {
    const double r = s.grid.node(j);
    e += (0.5 * s.v[j] * s.v[j] + potential_density(s.model, s.u[j], r)) * r * r * dr;
  }
  for (int f = 1; f < n; ++f) {
    const double rf = s.grid.face(f);
    const double g = (s.u[f] - s.u[f - 1]) / dr;
    e += 0.5 * rf * rf * g * g * dr;
  }
  const double g_outer = 2.0 * (s.boundary_value - s.u[n - 1]) / dr;
  e += 0.25 * s.grid.r_max * s.grid.r_max * g_outer * g_outer * dr;
  return e;
}

const char* trigger_name(SingularityTrigger t) {
  switch (t) {
    case SingularityTrigger::NonFinite: return "non-finite";
    case SingularityTrigger::EnergyDensity: return "energy-density";
    case SingularityTrigger::Gradient: return "gradient";
  }
  return "?";
}

namespace {

std::optional<SingularityEvent> check_triggers(const FieldState& s, const Thresholds& th) {
  const int n = s.grid.n_cells;
  if (!s.all_finite()) {
    SingularityEvent ev;
    ev.time = s.t;
    ev.trigger = SingularityTrigger::NonFinite;
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(s.u[j]) || !std::isfinite(s.v[j])) {
        ev.radius = s.grid.node(j);
        break;
      }
    }
    return ev;
  }
  const Eigen::ArrayXd ur = spatial_gradient(s);
  double worst_g = 0.0, worst_e = 0.0;
  int arg_g = 0, arg_e = 0;
  for (int j = 0; j < n; ++j) {
    const double g = std::max(std::abs(ur[j]), std::abs(s.v[j]));
    if (g > worst_g) { worst_g = g; arg_g = j; }
    const double e = energy_density(s.model, s.u[j], s.v[j], ur[j], s.grid.node(j));
    if (e > worst_e) { worst_e = e; arg_e = j; }
  }
  if (worst_e > th.energy_density) {
    return SingularityEvent{s.t, s.grid.node(arg_e), SingularityTrigger::EnergyDensity};
  }
  if (worst_g > th.gradient) {
    return SingularityEvent{s.t, s.grid.node(arg_g), SingularityTrigger::Gradient};
  }
  return std::nullopt;
}

}  // namespace

std::pair<EvolveReport, SpacetimeRecord> evolve(const FieldState& initial,
                                                const EvolveOptions& opts) {
  if (!(opts.cfl > 0.0 && opts.cfl <= 0.9))
    throw std::invalid_argument("evolve: cfl must lie in (0, 0.9]");
  if (!(opts.t_end > initial.t))
    throw std::invalid_argument("evolve: t_end must exceed the initial time");
  if (opts.record_every < 1) throw std::invalid_argument("evolve: record_every must be >= 1");

  const double total = opts.t_end - initial.t;
  const double dt_target = opts.cfl * initial.grid.dr;
  const long blocks = static_cast<long>(std::ceil(total / (dt_target * opts.record_every)));
  const long n_steps = std::max<long>(1, blocks) * opts.record_every;
  const double dt = total / static_cast<double>(n_steps);

  EvolveReport report;
  report.dt = dt;
  SpacetimeRecord record;
  record.grid = initial.grid;
  record.model = initial.model;
  record.boundary_value = initial.boundary_value;

  const auto take_snapshot = [&](const FieldState& s) {
    record.append(s);
    report.snap_times.push_back(s.t);
    report.snap_energy.push_back(total_energy(s));
    report.snap_charge.push_back(topological_charge(s));
    if (opts.on_snapshot) opts.on_snapshot(s);
  };

  FieldState state = initial;
  take_snapshot(state);

  for (long k = 1; k <= n_steps; ++k) {
    FieldState next = step_rk4(state, dt, opts.forcing);
    next.t = initial.t + static_cast<double>(k) * dt;  // exact cadence, no drift
    ++report.step_count;
    if (auto ev = check_triggers(next, opts.thresholds)) {
      report.singularity = *ev;
      if (next.all_finite()) {
        take_snapshot(next);
        state = std::move(next);
      } else if (record.times.empty() || record.times.back() != state.t) {
        take_snapshot(state);  // keep the last finite state for diagnostics
      }
      break;
    }
    state = std::move(next);
    if (k % opts.record_every == 0) take_snapshot(state);
  }

  report.final_state = state;
  return {std::move(report), std::move(record)};
}

double bump_window(double x) {
  const double x2 = x * x;
  if (x2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - x2));
}

double smoothstep_blend(double r, double x0, double x1) {
  if (r <= x0) return 0.0;
  if (r >= x1) return 1.0;
  const double x = (r - x0) / (x1 - x0);
  return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

InitialDataKind parse_initial_data_kind(const std::string& name) {
  if (name == "zero") return InitialDataKind::Zero;
  if (name == "stereographic") return InitialDataKind::Stereographic;
  if (name == "soliton") return InitialDataKind::Soliton;
  if (name == "soliton-perturbed") return InitialDataKind::SolitonPerturbed;
  if (name == "pulse") return InitialDataKind::Pulse;
  if (name == "shatah") return InitialDataKind::Shatah;
  throw std::invalid_argument("unknown initial data family: " + name);
}

const char* initial_data_name(InitialDataKind k) {
  switch (k) {
    case InitialDataKind::Zero: return "zero";
    case InitialDataKind::Stereographic: return "stereographic";
    case InitialDataKind::Soliton: return "soliton";
    case InitialDataKind::SolitonPerturbed: return "soliton-perturbed";
    case InitialDataKind::Pulse: return "pulse";
    case InitialDataKind::Shatah: return "shatah";
  }
  return "?";
}

namespace {

double interp_profile(const Eigen::ArrayXd& xs, const Eigen::ArrayXd& ys, double x) {
  const Eigen::Index n = xs.size();
  if (x <= xs[0]) return ys[0] * (x / xs[0]);  // regular center: u ~ slope * r
  if (x >= xs[n - 1]) return ys[n - 1];
  // uniform profile grid
  const double h = xs[1] - xs[0];
  Eigen::Index k = static_cast<Eigen::Index>((x - xs[0]) / h);
  k = std::min(k, n - 2);
  const double w = (x - xs[k]) / (xs[k + 1] - xs[k]);
  return (1.0 - w) * ys[k] + w * ys[k + 1];
}

}  // namespace

FieldState make_initial_state(InitialDataKind kind, const InitialDataParams& p,
                              const GridSpec& grid, ModelKind model,
                              const Eigen::ArrayXd* soliton_r, const Eigen::ArrayXd* soliton_u) {
  const double pi = std::numbers::pi;
  FieldState s;
  s.t = 0.0;
  s.grid = grid;
  s.model = model;
  s.u = Eigen::ArrayXd::Zero(grid.n_cells);
  s.v = Eigen::ArrayXd::Zero(grid.n_cells);
  s.boundary_value = 0.0;

  const double blend0 = 0.7 * grid.r_max;
  const double blend1 = 0.9 * grid.r_max;
  const auto cap_to_pi = [&](double r, double f) {
    const double chi = smoothstep_blend(r, blend0, blend1);
    return (1.0 - chi) * f + chi * pi;
  };

  switch (kind) {
    case InitialDataKind::Zero:
      break;
    case InitialDataKind::Stereographic: {
      for (int j = 0; j < grid.n_cells; ++j) {
        const double r = grid.node(j);
        s.u[j] = cap_to_pi(r, 2.0 * std::atan(r / p.lambda));
      }
      s.boundary_value = pi;
      break;
    }
    case InitialDataKind::Pulse: {
      for (int j = 0; j < grid.n_cells; ++j) {
        const double r = grid.node(j);
        const double x = (r - p.pulse_r0) / p.pulse_sigma;
        s.u[j] = p.pulse_amp * std::exp(-x * x) * bump_window(x / 6.0);
      }
      s.boundary_value = 0.0;
      break;
    }
    case InitialDataKind::Soliton:
    case InitialDataKind::SolitonPerturbed: {
      if (!soliton_r || !soliton_u)
        throw std::invalid_argument("make_initial_state: soliton data needs a profile");
      for (int j = 0; j < grid.n_cells; ++j) {
        const double r = grid.node(j);
        double f = interp_profile(*soliton_r, *soliton_u, r);
        if (kind == InitialDataKind::SolitonPerturbed) {
          const double x = (r - p.perturb_r0) / p.perturb_sigma;
          f += p.perturb_amp * std::exp(-x * x) * bump_window(x / 6.0);
        }
        s.u[j] = cap_to_pi(r, f);
      }
      s.boundary_value = pi;
      break;
    }
    case InitialDataKind::Shatah: {
      if (model != ModelKind::WaveMap)
        throw std::invalid_argument(
            "make_initial_state: shatah data solves the wave-map equation only; "
            "use model=wavemap");
      const double tau0 = p.shatah_tau0;
      if (!(tau0 > 0.0)) throw std::invalid_argument("make_initial_state: shatah_tau0 > 0");
      // Time-reflected so the vertex sits ahead at simulation time tau0.
      for (int j = 0; j < grid.n_cells; ++j) {
        const double r = grid.node(j);
        s.u[j] = 2.0 * std::atan(tau0 / r);
        s.v[j] = -2.0 * r / (tau0 * tau0 + r * r);
      }
      s.boundary_value = 2.0 * std::atan(tau0 / grid.r_max);
      break;
    }
  }
  return s;
}

}  // namespace skwv
