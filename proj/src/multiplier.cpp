#include "skwv/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace skwv {

const char* MultiplierTriple::name() const {
  switch (preset_) {
    case Preset::Energy: return "energy(1,0,0)";
    case Preset::Scaling: return "scaling(1,r/t,1/t)";
    case Preset::NullFull: return "null(1,1,1/r)";
    case Preset::NullHalf: return "null(1,1/2,1/(2r))";
  }
  return "?";
}

void MultiplierTriple::check(double tau, double r) const {
  if (!(r > 0.0)) throw std::domain_error("MultiplierTriple: requires r > 0");
  if (tau_singular() && !(tau > 0.0))
    throw std::domain_error("MultiplierTriple: preset requires tau > 0");
}

double MultiplierTriple::axis_weight() const {
  switch (preset_) {
    case Preset::Energy:
    case Preset::Scaling: return 0.0;
    case Preset::NullFull: return 0.5;
    case Preset::NullHalf: return 0.25;
  }
  return 0.0;
}

double MultiplierTriple::a(double tau, double r) const {
  check(tau, r);
  return 1.0;
}

double MultiplierTriple::b(double tau, double r) const {
  check(tau, r);
  switch (preset_) {
    case Preset::Energy: return 0.0;
    case Preset::Scaling: return r / tau;
    case Preset::NullFull: return 1.0;
    case Preset::NullHalf: return 0.5;
  }
  return 0.0;
}

double MultiplierTriple::c(double tau, double r) const {
  check(tau, r);
  switch (preset_) {
    case Preset::Energy: return 0.0;
    case Preset::Scaling: return 1.0 / tau;
    case Preset::NullFull: return 1.0 / r;
    case Preset::NullHalf: return 0.5 / r;
  }
  return 0.0;
}

double MultiplierTriple::a_t(double tau, double r) const {
  check(tau, r);
  return 0.0;
}

double MultiplierTriple::a_r(double tau, double r) const {
  check(tau, r);
  return 0.0;
}

double MultiplierTriple::b_t(double tau, double r) const {
  check(tau, r);
  return preset_ == Preset::Scaling ? -r / (tau * tau) : 0.0;
}

double MultiplierTriple::b_r(double tau, double r) const {
  check(tau, r);
  return preset_ == Preset::Scaling ? 1.0 / tau : 0.0;
}

double MultiplierTriple::c_t(double tau, double r) const {
  check(tau, r);
  return preset_ == Preset::Scaling ? -1.0 / (tau * tau) : 0.0;
}

double MultiplierTriple::c_r(double tau, double r) const {
  check(tau, r);
  switch (preset_) {
    case Preset::Energy:
    case Preset::Scaling: return 0.0;
    case Preset::NullFull: return -1.0 / (r * r);
    case Preset::NullHalf: return -0.5 / (r * r);
  }
  return 0.0;
}

double MultiplierTriple::box_c(double tau, double r) const {
  check(tau, r);
  // -c_tt + c_rr + (2/r) c_r; the spatial parts cancel for c proportional
  // to 1/r, so only the Scaling preset is nonzero.
  return preset_ == Preset::Scaling ? -2.0 / (tau * tau * tau) : 0.0;
}

double multiplier_bulk_I(const MultiplierTriple& m, ModelKind model, double tau, double r,
                         double u, double u_t, double u_r) {
  if (m.preset() == MultiplierTriple::Preset::Energy) {
    if (!(r > 0.0)) throw std::domain_error("multiplier_bulk_I: requires r > 0");
    return 0.0;  // every coefficient vanishes identically
  }
  const double a_t = m.a_t(tau, r), a_r = m.a_r(tau, r);
  const double b = m.b(tau, r), b_t = m.b_t(tau, r), b_r = m.b_r(tau, r);
  const double c = m.c(tau, r);

  const double kin_tt = 0.5 * a_t - (0.5 * b_r + b / r) + c;
  const double kin_tr = b_t - a_r;
  const double kin_rr = 0.5 * (a_t - b_r) + b / r - c;

  const double s = std::sin(u);
  const double r2 = r * r;
  double val = kin_tt * u_t * u_t + kin_tr * u_t * u_r + kin_rr * u_r * u_r +
               (a_t + b_r) * s * s / r2;
  if (model == ModelKind::AdkinsNappi) {
    const double w = u_minus_sincos(u);
    val += (a_t + b_r - 2.0 * b / r) * 0.5 * w * w / (r2 * r2);
  }
  val += 0.5 * m.box_c(tau, r) * u * u - c * u * nonlinearity(model, u, r);
  return val;
}

double boundary_G(const MultiplierTriple& m, ModelKind model, double tau, double r,
                  double u_plus, double u) {
  const double a = m.a(tau, r), b = m.b(tau, r);
  return 0.5 * (a + b) * u_plus * u_plus + (a - b) * potential_density(model, u, r);
}

double boundary_H(const MultiplierTriple& m, ModelKind model, double tau, double r,
                  double u_minus, double u) {
  const double a = m.a(tau, r), b = m.b(tau, r);
  return 0.5 * (a - b) * u_minus * u_minus + (a + b) * potential_density(model, u, r);
}

std::pair<double, double> c_boundary_weights(const MultiplierTriple& m, double tau, double r) {
  const double c_t = m.c_t(tau, r), c_r = m.c_r(tau, r);
  const double cor = m.c(tau, r) / r;
  return {c_r + c_t + cor, c_r - c_t + cor};
}

}  // namespace skwv
