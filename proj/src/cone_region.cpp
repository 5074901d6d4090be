#include "skwv/cone_region.hpp"

#include <algorithm>
#include <stdexcept>

namespace skwv {

ConeRegion::ConeRegion(Kind k, double t0, double t1, double vertex_time)
    : kind_(k), t0_(t0), t1_(t1), vertex_time_(vertex_time) {
  if (!(t0 > 0.0)) throw std::invalid_argument("ConeRegion: t0 must be positive");
  const bool two_param =
      k == Kind::ForwardCone || k == Kind::ShiftedCone || k == Kind::Trapezoid;
  if (two_param && !(t0 < t1)) throw std::invalid_argument("ConeRegion: need 0 < t0 < t1");
}

ConeRegion ConeRegion::ball_slice(double t0, double vertex_time) {
  return ConeRegion(Kind::BallSlice, t0, t0, vertex_time);
}
ConeRegion ConeRegion::backward_cone(double t0, double vertex_time) {
  return ConeRegion(Kind::BackwardCone, t0, t0, vertex_time);
}
ConeRegion ConeRegion::forward_cone(double t0, double t1, double vertex_time) {
  return ConeRegion(Kind::ForwardCone, t0, t1, vertex_time);
}
ConeRegion ConeRegion::shifted_cone(double t0, double t1, double vertex_time) {
  return ConeRegion(Kind::ShiftedCone, t0, t1, vertex_time);
}
ConeRegion ConeRegion::trapezoid(double t0, double t1, double vertex_time) {
  return ConeRegion(Kind::Trapezoid, t0, t1, vertex_time);
}

bool ConeRegion::contains(double tau, double r) const {
  if (r < 0.0) throw std::invalid_argument("ConeRegion::contains: r must be nonnegative");
  switch (kind_) {
    case Kind::BallSlice:
      return tau == t0_ && r <= t0_;
    case Kind::BackwardCone:
      return tau == 2.0 * t0_ - r && t0_ <= tau && tau <= 2.0 * t0_;
    case Kind::ForwardCone:
      return tau == r && t0_ <= tau && tau <= t1_;
    case Kind::ShiftedCone:
      return r == tau - 2.0 * t0_ && r >= 0.0 && r <= t1_ - t0_;
    case Kind::Trapezoid:
      return 2.0 * t0_ - tau <= r && r <= std::min(2.0 * t1_ - tau, tau);
  }
  return false;
}

std::optional<std::pair<double, double>> ConeRegion::segment_at(double tau) const {
  switch (kind_) {
    case Kind::BallSlice:
      if (tau == t0_) return std::make_pair(0.0, t0_);
      return std::nullopt;
    case Kind::BackwardCone: {
      if (tau < t0_ || tau > 2.0 * t0_) return std::nullopt;
      const double r = 2.0 * t0_ - tau;
      return std::make_pair(r, r);
    }
    case Kind::ForwardCone:
      if (tau < t0_ || tau > t1_) return std::nullopt;
      return std::make_pair(tau, tau);
    case Kind::ShiftedCone: {
      const double r = tau - 2.0 * t0_;
      if (r < 0.0 || r > t1_ - t0_) return std::nullopt;
      return std::make_pair(r, r);
    }
    case Kind::Trapezoid: {
      const double lo = std::max(2.0 * t0_ - tau, 0.0);
      const double hi = std::min(2.0 * t1_ - tau, tau);
      if (hi < lo) return std::nullopt;
      return std::make_pair(lo, hi);
    }
  }
  return std::nullopt;
}

}  // namespace skwv
