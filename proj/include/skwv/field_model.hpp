#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skwv {

/// Which radial field equation is being evolved. WaveMap is AdkinsNappi with
/// the quartic 1/r^4 repulsion removed.
enum class ModelKind { WaveMap, AdkinsNappi };

/// u - sin(u)cos(u), evaluated without catastrophic cancellation.
///
/// For |u| < 0.1 the direct formula loses ~eps/u^2 relative accuracy, so the
/// odd Taylor series through u^9 is used there; its truncation error at the
/// seam is 4e-13 relative, below the direct formula's rounding error.
template <typename Scalar>
Scalar u_minus_sincos(Scalar u) {
  const Scalar au = std::abs(u);
  if (au < Scalar(0.1)) {
    const Scalar u2 = u * u;
    // u - sin(2u)/2 = (2/3)u^3 - (2/15)u^5 + (4/315)u^7 - (2/2835)u^9 + ...
    return u * u2 *
           (Scalar(2) / Scalar(3) +
            u2 * (-Scalar(2) / Scalar(15) +
                  u2 * (Scalar(4) / Scalar(315) + u2 * (-Scalar(2) / Scalar(2835)))));
  }
  return u - std::sin(u) * std::cos(u);
}

/// 1 - cos(2u) computed as 2 sin^2(u) (exact identity, no cancellation).
template <typename Scalar>
Scalar one_minus_cos2u(Scalar u) {
  const Scalar s = std::sin(u);
  return Scalar(2) * s * s;
}

namespace detail {
inline void require_positive_radius(double r, const char* who) {
  if (!(r > 0.0)) throw std::domain_error(std::string(who) + ": requires r > 0");
}
}  // namespace detail

/// The nonlinearity N(u,r) with the equation written as u_tt = Laplacian(u) - N.
/// AdkinsNappi: N = sin(2u)/r^2 + (u - sin u cos u)(1 - cos 2u)/r^4;
/// WaveMap drops the quartic term.
inline double nonlinearity(ModelKind model, double u, double r) {
  detail::require_positive_radius(r, "nonlinearity");
  const double r2 = r * r;
  double n = std::sin(2.0 * u) / r2;
  if (model == ModelKind::AdkinsNappi) {
    n += u_minus_sincos(u) * one_minus_cos2u(u) / (r2 * r2);
  }
  return n;
}

/// Potential part of the energy density: sin^2(u)/r^2 (+ w^2/(2 r^4) for
/// AdkinsNappi, w = u - sin u cos u).
inline double potential_density(ModelKind model, double u, double r) {
  detail::require_positive_radius(r, "potential_density");
  const double s = std::sin(u);
  const double r2 = r * r;
  double p = s * s / r2;
  if (model == ModelKind::AdkinsNappi) {
    const double w = u_minus_sincos(u);
    p += 0.5 * w * w / (r2 * r2);
  }
  return p;
}

/// e = (u_t^2 + u_r^2)/2 + potential.
inline double energy_density(ModelKind model, double u, double u_t, double u_r, double r) {
  detail::require_positive_radius(r, "energy_density");
  return 0.5 * (u_t * u_t + u_r * u_r) + potential_density(model, u, r);
}

/// Outgoing-null density (u_plus^2)/2 + potential; with u_minus in place of
/// u_plus this is also the ingoing-cone energy density.
inline double flux_density(double u_plus, double u, double r, ModelKind model) {
  detail::require_positive_radius(r, "flux_density");
  return 0.5 * u_plus * u_plus + potential_density(model, u, r);
}

/// u (u - sin u cos u)(1 - cos 2u); nonnegative for every real u.
template <typename Scalar>
Scalar positivity_term(Scalar u) {
  return u * u_minus_sincos(u) * one_minus_cos2u(u);
}

inline const char* model_name(ModelKind m) {
  return m == ModelKind::WaveMap ? "wavemap" : "adkins-nappi";
}

inline int model_id(ModelKind m) { return m == ModelKind::WaveMap ? 0 : 1; }

}  // namespace skwv
