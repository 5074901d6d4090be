#include "skwv/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "skwv/evolver.hpp"

namespace skwv {

RecordSampler::RecordSampler(const SpacetimeRecord& rec, double vertex_time)
    : rec_(rec), vertex_time_(vertex_time) {
  if (rec.size() < 2) throw std::invalid_argument("RecordSampler: need at least two snapshots");
  ur_snaps_.reserve(rec.size());
  for (int k = 0; k < rec.size(); ++k) {
    FieldState s = rec.state_at_index(k);
    ur_snaps_.push_back(spatial_gradient(s));
  }
}

double RecordSampler::tau_min() const { return vertex_time_ - rec_.times.back(); }
double RecordSampler::tau_max() const { return vertex_time_ - rec_.times.front(); }

int RecordSampler::bracket(double t_sim) const {
  const auto& ts = rec_.times;
  const double slack = 1e-9 * std::max(1.0, std::abs(ts.back()));
  if (t_sim < ts.front() - slack || t_sim > ts.back() + slack)
    throw std::out_of_range("RecordSampler: time outside the recorded range");
  const double t = std::clamp(t_sim, ts.front(), ts.back());
  auto it = std::upper_bound(ts.begin(), ts.end(), t);
  int k = static_cast<int>(it - ts.begin()) - 1;
  return std::clamp(k, 0, rec_.size() - 2);
}

double RecordSampler::interp_radial(const Eigen::ArrayXd& arr, double r) const {
  const GridSpec& g = rec_.grid;
  const int n = g.n_cells;
  if (r < 0.0 || r > g.r_max + 1e-12 * g.r_max)
    throw std::out_of_range("RecordSampler: radius outside the grid");
  const double x = r / g.dr - 0.5;  // node index coordinate
  if (x <= 0.0) {
    // below the first node: linear extrapolation to the axis, valid for any
    // regular profile (axis values are multiples of pi, not necessarily 0)
    const double axis = 1.5 * arr[0] - 0.5 * arr[1];
    return axis + (arr[0] - axis) * (r / g.node(0));
  }
  if (x >= n - 1) {
    // between the last node and the outer face: extrapolate from the last pair
    const double w = (r - g.node(n - 1)) / g.dr;
    return arr[n - 1] + w * (arr[n - 1] - arr[n - 2]);
  }
  const int j = static_cast<int>(x);
  const double w = x - j;
  return (1.0 - w) * arr[j] + w * arr[j + 1];
}

double RecordSampler::u_at_axis(double tau) const {
  const double t_sim = vertex_time_ - tau;
  const int k = bracket(t_sim);
  const double t0 = rec_.times[k], t1 = rec_.times[k + 1];
  const double th = std::clamp((t_sim - t0) / (t1 - t0), 0.0, 1.0);
  const auto axis = [&](int kk) {
    return 1.5 * rec_.u_snaps[kk][0] - 0.5 * rec_.u_snaps[kk][1];
  };
  return (1.0 - th) * axis(k) + th * axis(k + 1);
}

RecordSampler::Sample RecordSampler::at(double tau, double r) const {
  const double t_sim = vertex_time_ - tau;
  const int k = bracket(t_sim);
  const double t0 = rec_.times[k], t1 = rec_.times[k + 1];
  const double th = std::clamp((t_sim - t0) / (t1 - t0), 0.0, 1.0);

  const double u0 = interp_radial(rec_.u_snaps[k], r);
  const double u1 = interp_radial(rec_.u_snaps[k + 1], r);
  const double v0 = interp_radial(rec_.v_snaps[k], r);
  const double v1 = interp_radial(rec_.v_snaps[k + 1], r);
  const double g0 = interp_radial(ur_snaps_[k], r);
  const double g1 = interp_radial(ur_snaps_[k + 1], r);

  Sample out;
  out.u = (1.0 - th) * u0 + th * u1;
  out.u_tau = -((1.0 - th) * v0 + th * v1);  // tau runs against simulation time
  out.u_r = (1.0 - th) * g0 + th * g1;
  return out;
}

namespace {

// Composite midpoint rule with step <= h_target on [lo, hi].
double integrate_midpoint(const std::function<double(double)>& f, double lo, double hi,
                          double h_target) {
  if (!(hi > lo)) return 0.0;
  const int m = std::max(1, static_cast<int>(std::ceil((hi - lo) / h_target)));
  const double h = (hi - lo) / m;
  double sum = 0.0;
  for (int k = 0; k < m; ++k) sum += f(lo + (k + 0.5) * h);
  return sum * h;
}

}  // namespace

double ball_energy(const SpacetimeRecord& rec, double t_sim, double R) {
  if (!(R > 0.0 && R <= rec.grid.r_max + 1e-12 * rec.grid.r_max))
    throw std::invalid_argument("ball_energy: need 0 < R <= r_max");
  RecordSampler s(rec, 0.0);  // vertex 0: tau = -t_sim
  const auto integrand = [&](double r) {
    const auto p = s.at(-t_sim, r);
    return energy_density(rec.model, p.u, p.u_tau, p.u_r, r) * r * r;
  };
  return integrate_midpoint(integrand, 0.0, R, rec.grid.dr);
}

double local_energy(const RecordSampler& s, double T) {
  const double tau = T;
  const auto integrand = [&](double r) {
    const auto p = s.at(tau, r);
    return energy_density(s.model(), p.u, p.u_tau, p.u_r, r) * r * r;
  };
  return integrate_midpoint(integrand, 0.0, T, s.dr());
}

double cone_energy(const RecordSampler& s, double T) {
  const auto integrand = [&](double r) {
    const auto p = s.at(2.0 * T - r, r);
    const double um = p.u_tau - p.u_r;
    return (0.5 * um * um + potential_density(s.model(), p.u, r)) * r * r;
  };
  return integrate_midpoint(integrand, 0.0, T, 0.5 * s.dr());
}

double flux(const RecordSampler& s, double t0, double t1) {
  if (!(0.0 < t0 && t0 < t1)) throw std::invalid_argument("flux: need 0 < t0 < t1");
  const auto integrand = [&](double r) {
    const auto p = s.at(r, r);
    const double up = p.u_tau + p.u_r;
    return (0.5 * up * up + potential_density(s.model(), p.u, r)) * r * r;
  };
  return integrate_midpoint(integrand, t0, t1, 0.5 * s.dr());
}

namespace {

double heavy_potential(ModelKind model, double u, double r) {
  // sin^2 u / r^2 + w^2 / r^4 (no 1/2 factors), quartic only for AdkinsNappi
  const double si = std::sin(u);
  double p = si * si / (r * r);
  if (model == ModelKind::AdkinsNappi) {
    const double w = u_minus_sincos(u);
    p += w * w / (r * r * r * r);
  }
  return p;
}

}  // namespace

double weighted_local_energy(const RecordSampler& s, double T) {
  const auto integrand = [&](double r) {
    const auto p = s.at(T, r);
    const double um = p.u_tau - p.u_r;
    const double up = p.u_tau + p.u_r;
    return ((1.0 - r / T) * um * um + up * up + heavy_potential(s.model(), p.u, r)) * r * r;
  };
  return integrate_midpoint(integrand, 0.0, T, s.dr());
}

double cone_weighted_energy(const RecordSampler& s, double T) {
  const auto integrand = [&](double r) {
    const double tau = 2.0 * T - r;
    const auto p = s.at(tau, r);
    const double um = p.u_tau - p.u_r;
    return ((1.0 - r / tau) * um * um + heavy_potential(s.model(), p.u, r)) * r * r;
  };
  return integrate_midpoint(integrand, 0.0, T, 0.5 * s.dr());
}

double bulk_I_integral(const RecordSampler& s, double t0, double t1,
                       const MultiplierTriple& m) {
  if (!(0.0 < t0 && t0 < t1)) throw std::invalid_argument("bulk_I_integral: need 0 < t0 < t1");
  const ConeRegion region = ConeRegion::trapezoid(t0, t1, s.vertex_time());
  const double h = 0.5 * s.dr();

  const auto slice = [&](double tau) {
    const auto seg = region.segment_at(tau);
    if (!seg || !(seg->second > seg->first)) return 0.0;
    const auto integrand = [&](double r) {
      const auto p = s.at(tau, r);
      return multiplier_bulk_I(m, s.model(), tau, r, p.u, p.u_tau, p.u_r) * r * r;
    };
    return integrate_midpoint(integrand, seg->first, seg->second, h);
  };

  // The slice endpoints are piecewise linear in tau with kinks where the
  // lower edge reaches the axis and where the upper edge switches cones;
  // integrate each smooth panel separately.
  double kinks[4] = {t0, std::min(2.0 * t0, t1), std::max(2.0 * t0, t1), 2.0 * t1};
  double total = 0.0;
  for (int p = 0; p + 1 < 4; ++p) {
    const double lo = kinks[p], hi = kinks[p + 1];
    if (!(hi > lo)) continue;
    total += integrate_midpoint(slice, lo, hi, h);
  }
  return total;
}

namespace {

// Line integral over the ingoing cone tau = 2T - r of [H + w_K u^2] r^2 dr.
double ingoing_boundary_integral(const RecordSampler& s, double T, const MultiplierTriple& m) {
  const auto integrand = [&](double r) {
    const double tau = 2.0 * T - r;
    const auto p = s.at(tau, r);
    const double um = p.u_tau - p.u_r;
    const double wk = c_boundary_weights(m, tau, r).second;
    return (boundary_H(m, s.model(), tau, r, um, p.u) + wk * p.u * p.u) * r * r;
  };
  return integrate_midpoint(integrand, 0.0, T, 0.5 * s.dr());
}

// Line integral over the outgoing cone tau = r of [G - w_C u^2] r^2 dr.
double outgoing_boundary_integral(const RecordSampler& s, double t0, double t1,
                                  const MultiplierTriple& m) {
  const auto integrand = [&](double r) {
    const auto p = s.at(r, r);
    const double up = p.u_tau + p.u_r;
    const double wc = c_boundary_weights(m, r, r).first;
    return (boundary_G(m, s.model(), r, r, up, p.u) - wc * p.u * p.u) * r * r;
  };
  return integrate_midpoint(integrand, t0, t1, 0.5 * s.dr());
}

}  // namespace

double multiplier_identity_residual(const RecordSampler& s, double t0, double t1,
                                    const MultiplierTriple& m) {
  if (!(0.0 < t0 && t0 < t1))
    throw std::invalid_argument("multiplier_identity_residual: need 0 < t0 < t1");

  const double bulk = bulk_I_integral(s, t0, t1, m);
  const double out_cone = outgoing_boundary_integral(s, t0, t1, m);

  // Integrating the multiplier divergence identity over the band leaves
  // point terms c r^2 u^2 where the outgoing cone meets the ingoing ones;
  // they vanish in the vertex limit but not at finite t0, t1.
  const auto corner = [&](double T) {
    const double c = m.c(T, T);
    const double u = s.at(T, T).u;
    return c * T * T * u * u;
  };

  // For the 1/r-type multipliers the radial u^2 flux does not vanish on the
  // axis unless u(tau, 0) = 0, so the band's axis segment contributes.
  double axis = 0.0;
  if (m.axis_weight() != 0.0) {
    axis = m.axis_weight() * integrate_midpoint(
                                 [&](double tau) {
                                   const double u0 = s.u_at_axis(tau);
                                   return u0 * u0;
                                 },
                                 2.0 * t0, 2.0 * t1, s.dr());
  }

  const double lhs = bulk - axis + out_cone + corner(t1) - corner(t0);
  const double rhs =
      ingoing_boundary_integral(s, t1, m) - ingoing_boundary_integral(s, t0, m);
  return std::abs(lhs - rhs);
}

double flux_identity_residual(const RecordSampler& s, double t0, double t1) {
  return multiplier_identity_residual(s, t0, t1,
                                      MultiplierTriple(MultiplierTriple::Preset::Energy));
}

DiagnosticSeries concentration_series(const RecordSampler& s, double T_hi, double T_lo,
                                      int n_points) {
  if (!(0.0 < T_lo && T_lo < T_hi))
    throw std::invalid_argument("concentration_series: need 0 < T_lo < T_hi");
  if (n_points < 2) throw std::invalid_argument("concentration_series: need >= 2 points");
  DiagnosticSeries out;
  out.label = "local_energy_in_ball_T";
  const double ratio = std::pow(T_lo / T_hi, 1.0 / (n_points - 1));
  double T = T_hi;
  for (int k = 0; k < n_points; ++k, T *= ratio) {
    out.points.emplace_back(T, local_energy(s, T));
  }
  return out;
}

DiagnosticSeries sup_norm_series(const SpacetimeRecord& rec) {
  DiagnosticSeries out;
  out.label = "sup_norm";
  for (int k = 0; k < rec.size(); ++k) {
    out.points.emplace_back(rec.times[k], rec.u_snaps[k].abs().maxCoeff());
  }
  return out;
}

int gh_bounds_report(const RecordSampler& s, const MultiplierTriple& m, int n_samples,
                     std::uint64_t seed, double tau_lo, double tau_hi) {
  if (!(0.0 < tau_lo && tau_lo < tau_hi))
    throw std::invalid_argument("gh_bounds_report: need 0 < tau_lo < tau_hi");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double slack = 1e-12;
  const double r_min = 0.5 * s.dr();

  int violations = 0;
  for (int k = 0; k < n_samples; ++k) {
    const double tau = tau_lo + (tau_hi - tau_lo) * unit(rng);
    const double r = r_min + (tau - r_min) * unit(rng);
    if (!(r > 0.0) || r > tau) continue;
    const auto p = s.at(tau, r);
    const double up = p.u_tau + p.u_r;
    const double um = p.u_tau - p.u_r;

    const double G = boundary_G(m, s.model(), tau, r, up, p.u);
    const double H = boundary_H(m, s.model(), tau, r, um, p.u);
    const double fd = flux_density(up, p.u, r, s.model());
    const double ed = flux_density(um, p.u, r, s.model());
    const auto [wc, wk] = c_boundary_weights(m, tau, r);
    const double cap = 2.0 / (r * r);

    bool bad = false;
    bad |= G < -slack || G > 2.0 * fd + slack;
    bad |= H < -slack || H > 2.0 * ed + slack;
    bad |= std::abs(wc) > cap + slack;
    bad |= wk < -slack || wk > cap + slack;
    if (bad) ++violations;
  }
  return violations;
}

}  // namespace skwv
