#include "skwv/exact_solutions.hpp"

#include <cmath>
#include <stdexcept>

namespace skwv {

double shatah_u(double tau, double r) {
  if (!(r > 0.0)) throw std::domain_error("shatah_u: requires r > 0");
  return 2.0 * std::atan(tau / r);
}

double shatah_u_tau(double tau, double r) {
  if (!(r > 0.0)) throw std::domain_error("shatah_u_tau: requires r > 0");
  return 2.0 * r / (tau * tau + r * r);
}

double shatah_u_r(double tau, double r) {
  if (!(r > 0.0)) throw std::domain_error("shatah_u_r: requires r > 0");
  return -2.0 * tau / (tau * tau + r * r);
}

double shatah_sin_u(double tau, double r) { return 2.0 * tau * r / (tau * tau + r * r); }

double shatah_cos_u(double tau, double r) {
  return (r * r - tau * tau) / (tau * tau + r * r);
}

FieldState shatah_state(double tau, const GridSpec& grid) {
  if (!(tau > 0.0)) throw std::invalid_argument("shatah_state: requires tau > 0");
  FieldState s;
  s.t = tau;
  s.grid = grid;
  s.model = ModelKind::WaveMap;
  s.u.resize(grid.n_cells);
  s.v.resize(grid.n_cells);
  for (int j = 0; j < grid.n_cells; ++j) {
    const double r = grid.node(j);
    s.u[j] = shatah_u(tau, r);
    s.v[j] = shatah_u_tau(tau, r);
  }
  s.boundary_value = shatah_u(tau, grid.r_max);
  return s;
}

double manufactured_u(double t, double r) { return std::sin(t) * r * std::exp(-r * r); }

double manufactured_u_t(double t, double r) { return std::cos(t) * r * std::exp(-r * r); }

double manufactured_forcing(ModelKind model, double t, double r) {
  if (!(r > 0.0)) throw std::domain_error("manufactured_forcing: requires r > 0");
  const double g = r * std::exp(-r * r);
  // Laplacian of r exp(-r^2) in 3 radial dimensions: exp(-r^2)(4r^3 - 10r + 2/r);
  // the 2/r piece cancels against sin(2u)/r^2 ~ 2u/r^2 inside N for small u.
  const double lap = std::exp(-r * r) * (4.0 * r * r * r - 10.0 * r + 2.0 / r);
  const double u = std::sin(t) * g;
  return -std::sin(t) * g - std::sin(t) * lap + nonlinearity(model, u, r);
}

ExactSolution ExactSolution::shatah() {
  ExactSolution e;
  e.kind = Kind::ShatahSelfSimilar;
  e.u = [](double t, double r) { return shatah_u(t, r); };
  e.u_t = [](double t, double r) { return shatah_u_tau(t, r); };
  return e;
}

ExactSolution ExactSolution::vacuum() {
  ExactSolution e;
  e.kind = Kind::Vacuum;
  e.u = [](double, double) { return 0.0; };
  e.u_t = [](double, double) { return 0.0; };
  return e;
}

ExactSolution ExactSolution::linear_radial_pulse(std::function<double(double)> u0) {
  ExactSolution e;
  e.kind = Kind::LinearRadialPulse;
  const auto psi = [u0](double x) { return x * u0(std::abs(x)); };  // odd extension of r*u0
  e.u = [psi](double t, double r) {
    if (!(r > 0.0)) throw std::domain_error("linear_radial_pulse: requires r > 0");
    return (psi(r + t) + psi(r - t)) / (2.0 * r);
  };
  e.u_t = [u0, psi](double t, double r) {
    // d/dt [psi(r+t) + psi(r-t)]/(2r) with psi'(x) = u0(|x|) + x u0'(|x|) sign(x);
    // evaluated by a tight central difference since u0 is an arbitrary callable.
    const double h = 1e-6;
    const double up = (psi(r + t + h) + psi(r - t - h)) / (2.0 * r);
    const double dn = (psi(r + t - h) + psi(r - t + h)) / (2.0 * r);
    return (up - dn) / (2.0 * h);
  };
  return e;
}

ExactSolution ExactSolution::manufactured() {
  ExactSolution e;
  e.kind = Kind::Manufactured;
  e.u = [](double t, double r) { return manufactured_u(t, r); };
  e.u_t = [](double t, double r) { return manufactured_u_t(t, r); };
  return e;
}

}  // namespace skwv
