#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "skwv/evolver.hpp"
#include "skwv/exact_solutions.hpp"

using namespace skwv;

namespace {

FieldState pulse_state(int n, double r_max, double amp = 0.5, double r0 = 6.0,
                       double sigma = 0.75) {
  InitialDataParams p;
  p.pulse_amp = amp;
  p.pulse_r0 = r0;
  p.pulse_sigma = sigma;
  return make_initial_state(InitialDataKind::Pulse, p, make_grid(r_max, n),
                            ModelKind::AdkinsNappi);
}

// L2 norm weighted by the volume element r^2 dr.
double weighted_l2(const Eigen::ArrayXd& diff, const GridSpec& g) {
  double s = 0.0;
  for (int j = 0; j < g.n_cells; ++j) {
    const double r = g.node(j);
    s += diff[j] * diff[j] * r * r * g.dr;
  }
  return std::sqrt(s);
}

// Restrict a fine staggered-grid array to a grid with half the cells by
// averaging node pairs (the coarse node is the midpoint of two fine nodes).
Eigen::ArrayXd restrict_half(const Eigen::ArrayXd& fine) {
  Eigen::ArrayXd coarse(fine.size() / 2);
  for (Eigen::Index j = 0; j < coarse.size(); ++j)
    coarse[j] = 0.5 * (fine[2 * j] + fine[2 * j + 1]);
  return coarse;
}

}  // namespace

TEST_CASE("spatial gradient: exact for linear data, zero for zero data") {
  const GridSpec g = make_grid(10.0, 64);
  FieldState s;
  s.grid = g;
  s.u = Eigen::ArrayXd::Zero(g.n_cells);
  s.v = Eigen::ArrayXd::Zero(g.n_cells);
  CHECK(spatial_gradient(s).abs().maxCoeff() == 0.0);

  s.u = g.nodes();  // u = r
  const Eigen::ArrayXd grad = spatial_gradient(s);
  for (int j = 0; j < g.n_cells; ++j) CHECK(grad[j] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("spatial gradient converges at second order on sin(r)") {
  double prev_err = 0.0;
  for (int n : {128, 256, 512}) {
    const GridSpec g = make_grid(10.0, n);
    FieldState s;
    s.grid = g;
    s.u = g.nodes().sin();
    s.v = Eigen::ArrayXd::Zero(n);
    const Eigen::ArrayXd grad = spatial_gradient(s);
    const Eigen::ArrayXd exact = g.nodes().cos();
    const double err = (grad - exact).abs().maxCoeff();
    if (prev_err > 0.0) CHECK(prev_err / err > 3.5);
    prev_err = err;
  }
}

TEST_CASE("rhs: zero field is a fixed point") {
  FieldState s = pulse_state(64, 10.0, 0.0);
  const auto [du, dv] = rhs(s);
  CHECK(du.abs().maxCoeff() == 0.0);
  CHECK(dv.abs().maxCoeff() == 0.0);
}

TEST_CASE("rhs reproduces the exact wave-map acceleration of the self-similar profile") {
  // at fixed cone time the acceleration equals u_tautau = -4 r tau/(r^2+tau^2)^2;
  // measured away from the innermost cells, where the cell-centered operator
  // is first-order pointwise (integral norms are unaffected)
  const double tau = 1.0;
  double prev_err = 0.0;
  for (int n : {512, 1024, 2048}) {
    const GridSpec g = make_grid(5.0, n);
    FieldState s = shatah_state(tau, g);
    const auto [du, dv] = rhs(s);
    (void)du;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
      const double r = g.node(j);
      if (r < 0.25 || r > 4.0) continue;
      const double exact = -4.0 * r * tau / std::pow(r * r + tau * tau, 2);
      err = std::max(err, std::abs(dv[j] - exact));
    }
    if (prev_err > 0.0) CHECK(prev_err / err > 3.5);
    prev_err = err;
  }
}

TEST_CASE("rk4 step: zero state stays zero; halved steps gain fifth-order accuracy") {
  FieldState zero = pulse_state(64, 10.0, 0.0);
  const FieldState stepped = step_rk4(zero, 0.05);
  CHECK(stepped.u.abs().maxCoeff() == 0.0);
  CHECK(stepped.v.abs().maxCoeff() == 0.0);

  const FieldState s = pulse_state(256, 10.0);
  const auto local_diff = [&](double dt) {
    const FieldState one = step_rk4(s, dt);
    const FieldState two = step_rk4(step_rk4(s, dt / 2), dt / 2);
    return (one.u - two.u).abs().maxCoeff() + (one.v - two.v).abs().maxCoeff();
  };
  const double d1 = local_diff(0.02);
  const double d2 = local_diff(0.01);
  CHECK(d1 / d2 > 20.0);  // one-vs-two-halves difference scales like dt^5
}

TEST_CASE("forced linear pulse follows the d'Alembert solution at unit speed") {
  // With forcing chosen so the radial linear-wave solution solves the forced
  // wave-map equation exactly, the evolved field must track the advecting
  // d'Alembert profile.
  const auto u0 = [](double r) {
    const double x = (r - 6.0) / 0.75;
    return 0.4 * std::exp(-x * x) * bump_window(x / 6.0);
  };
  const ExactSolution exact = ExactSolution::linear_radial_pulse(u0);
  const double t_end = 2.0;

  double prev_err = 0.0;
  for (int n : {256, 512, 1024}) {
    const GridSpec g = make_grid(16.0, n);
    FieldState s;
    s.t = 0.0;
    s.grid = g;
    s.model = ModelKind::WaveMap;
    s.u.resize(n);
    s.v = Eigen::ArrayXd::Zero(n);
    for (int j = 0; j < n; ++j) s.u[j] = u0(g.node(j));
    s.boundary_value = 0.0;

    EvolveOptions opts;
    opts.t_end = t_end;
    opts.forcing = [&](double t, double r) {
      return nonlinearity(ModelKind::WaveMap, exact.u(t, r), r);
    };
    const auto [report, record] = evolve(s, opts);
    (void)record;

    Eigen::ArrayXd diff(n);
    for (int j = 0; j < n; ++j)
      diff[j] = report.final_state.u[j] - exact.u(t_end, g.node(j));
    const double err = weighted_l2(diff, g);
    if (prev_err > 0.0) CHECK(prev_err / err > 3.5);
    prev_err = err;
  }
}

TEST_CASE("evolve: zero data stays zero with no singularity") {
  FieldState s = pulse_state(64, 10.0, 0.0);
  EvolveOptions opts;
  opts.t_end = 1.0;
  const auto [report, record] = evolve(s, opts);
  CHECK_FALSE(report.singularity.has_value());
  CHECK(report.final_state.u.abs().maxCoeff() == 0.0);
  CHECK(record.size() >= 2);
  for (double e : report.snap_energy) CHECK(e == 0.0);
}

TEST_CASE("evolve rejects bad arguments") {
  FieldState s = pulse_state(64, 10.0);
  EvolveOptions opts;
  opts.t_end = 1.0;
  opts.cfl = 0.0;
  CHECK_THROWS_AS(evolve(s, opts), std::invalid_argument);
  opts.cfl = 1.5;
  CHECK_THROWS_AS(evolve(s, opts), std::invalid_argument);
  opts.cfl = 0.4;
  opts.t_end = -1.0;
  CHECK_THROWS_AS(evolve(s, opts), std::invalid_argument);
}

TEST_CASE("evolve is deterministic bit for bit") {
  FieldState s = pulse_state(256, 20.0);
  EvolveOptions opts;
  opts.t_end = 1.0;
  const auto [r1, rec1] = evolve(s, opts);
  const auto [r2, rec2] = evolve(s, opts);
  REQUIRE(rec1.size() == rec2.size());
  for (int k = 0; k < rec1.size(); ++k) {
    CHECK((rec1.u_snaps[k] == rec2.u_snaps[k]).all());
    CHECK((rec1.v_snaps[k] == rec2.v_snaps[k]).all());
  }
  CHECK(r1.snap_energy == r2.snap_energy);
}

TEST_CASE("record cadence is uniform to one ulp") {
  FieldState s = pulse_state(128, 10.0);
  EvolveOptions opts;
  opts.t_end = 1.7;
  opts.record_every = 3;
  const auto [report, record] = evolve(s, opts);
  (void)report;
  REQUIRE(record.size() >= 3);
  const double cadence = record.times[1] - record.times[0];
  for (int k = 1; k + 1 < record.size(); ++k) {
    const double d = record.times[k + 1] - record.times[k];
    CHECK(std::abs(d - cadence) <= 2e-16 * std::max(1.0, record.times.back()));
  }
  CHECK(record.times.back() == doctest::Approx(1.7).epsilon(1e-15));
}

TEST_CASE("finite propagation speed from compactly supported data") {
  const int n = 512;
  const double r_max = 20.0;
  FieldState s = pulse_state(n, r_max);  // support inside [1.5, 10.5]
  EvolveOptions opts;
  opts.t_end = 2.0;
  const auto [report, record] = evolve(s, opts);
  (void)record;
  const double edge = 10.5 + opts.t_end + 2.0 * s.grid.dr;
  for (int j = 0; j < n; ++j) {
    if (s.grid.node(j) > edge) {
      CHECK(std::abs(report.final_state.u[j]) <= 1e-12);
      CHECK(std::abs(report.final_state.v[j]) <= 1e-12);
    }
  }
}

TEST_CASE("inner region is independent of the outer boundary value") {
  const int n = 512;
  const double r_max = 20.0;
  const double t_end = 2.0;
  FieldState a = pulse_state(n, r_max);
  FieldState b = a;
  b.boundary_value = 0.37;  // a different Dirichlet condition
  EvolveOptions opts;
  opts.t_end = t_end;
  const auto [ra, reca] = evolve(a, opts);
  const auto [rb, recb] = evolve(b, opts);
  (void)reca;
  (void)recb;
  // The conflicting boundary value launches a step front; its numerical
  // smearing is ~(t dr^2)^(1/3) wide, so allow one length unit inside the
  // exact causal radius r_max - t_end.
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    if (a.grid.node(j) <= r_max - t_end - 1.0)
      worst = std::max(worst, std::abs(ra.final_state.u[j] - rb.final_state.u[j]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("global convergence against a four-times-finer reference") {
  const double t_end = 1.5;
  const double r_max = 12.0;
  const auto run = [&](int n) {
    InitialDataParams p;
    p.pulse_amp = 0.8;
    p.pulse_r0 = 4.0;
    p.pulse_sigma = 0.8;
    FieldState s = make_initial_state(InitialDataKind::Pulse, p, make_grid(r_max, n),
                                      ModelKind::AdkinsNappi);
    EvolveOptions opts;
    opts.t_end = t_end;
    return evolve(s, opts).first.final_state;
  };
  const FieldState ref = run(1024);
  Eigen::ArrayXd ref_on_256 = restrict_half(restrict_half(ref.u));
  Eigen::ArrayXd ref_on_128 = restrict_half(ref_on_256);

  const FieldState c128 = run(128);
  const FieldState c256 = run(256);
  const double e128 = weighted_l2(c128.u - ref_on_128, c128.grid);
  const double e256 = weighted_l2(c256.u - ref_on_256, c256.grid);
  CHECK(e128 / e256 > 3.5);
}

TEST_CASE("self-similar wave-map data trips the gradient monitor near the vertex") {
  InitialDataParams p;
  p.shatah_tau0 = 1.0;
  FieldState s = make_initial_state(InitialDataKind::Shatah, p, make_grid(5.0, 512),
                                    ModelKind::WaveMap);
  EvolveOptions opts;
  opts.t_end = 1.0;
  opts.thresholds.gradient = 10.0;
  const auto [report, record] = evolve(s, opts);
  (void)record;
  REQUIRE(report.singularity.has_value());
  CHECK(report.singularity->trigger == SingularityTrigger::Gradient);
  const double tau_star = 1.0 - report.singularity->time;
  CHECK(tau_star > 0.05);
  CHECK(tau_star < 0.5);
  CHECK(report.singularity->radius < 0.5);  // fires near the vertex axis
}

TEST_CASE("shatah data demands the wave-map model") {
  InitialDataParams p;
  CHECK_THROWS_AS(make_initial_state(InitialDataKind::Shatah, p, make_grid(5.0, 64),
                                     ModelKind::AdkinsNappi),
                  std::invalid_argument);
}

TEST_CASE("degree-one data pins the boundary to pi and the charge to one") {
  InitialDataParams p;
  FieldState s = make_initial_state(InitialDataKind::Stereographic, p, make_grid(20.0, 256),
                                    ModelKind::AdkinsNappi);
  CHECK(s.boundary_value == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(topological_charge(s) == doctest::Approx(1.0).epsilon(1e-15));

  EvolveOptions opts;
  opts.t_end = 1.0;
  const auto [report, record] = evolve(s, opts);
  (void)record;
  for (double q : report.snap_charge) CHECK(std::abs(q - 1.0) <= 1e-12);
}

TEST_CASE("charge examples from the boundary value") {
  FieldState s = pulse_state(64, 10.0, 0.0);
  CHECK(topological_charge(s) == 0.0);
  s.boundary_value = std::numbers::pi;
  CHECK(topological_charge(s) == doctest::Approx(1.0).epsilon(1e-15));
  s.boundary_value = std::numbers::pi / 2;
  CHECK(topological_charge(s) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("snapshot callback sees every recorded state in order") {
  FieldState s = pulse_state(128, 10.0);
  EvolveOptions opts;
  opts.t_end = 1.0;
  std::vector<double> seen;
  opts.on_snapshot = [&](const FieldState& st) { seen.push_back(st.t); };
  const auto [report, record] = evolve(s, opts);
  (void)report;
  REQUIRE(static_cast<int>(seen.size()) == record.size());
  for (int k = 0; k < record.size(); ++k) CHECK(seen[k] == record.times[k]);
}
