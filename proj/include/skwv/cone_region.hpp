#pragma once

#include <optional>
#include <utility>

namespace skwv {

/// Spacetime sets used by the local-energy machinery, expressed in "cone
/// time" tau measured from a chosen vertex (tau decreases toward the vertex
/// as the simulation runs forward; the runner fixes vertex_time).
///
///   BallSlice(t0)        the ball {tau == t0, r <= t0}
///   BackwardCone(t0)     the null segment {tau = 2*t0 - r, t0 <= tau <= 2*t0}
///   ForwardCone(t0,t1)   the null segment {tau = r, t0 <= tau <= t1}
///   ShiftedCone(t0,t1)   the null segment {r = tau - 2*t0, r <= t1 - t0}
///   Trapezoid(t0,t1)     the band {2*t0 - tau <= r <= min(2*t1 - tau, tau)}
class ConeRegion {
 public:
  enum class Kind { BallSlice, BackwardCone, ForwardCone, ShiftedCone, Trapezoid };

  static ConeRegion ball_slice(double t0, double vertex_time = 0.0);
  static ConeRegion backward_cone(double t0, double vertex_time = 0.0);
  static ConeRegion forward_cone(double t0, double t1, double vertex_time = 0.0);
  static ConeRegion shifted_cone(double t0, double t1, double vertex_time = 0.0);
  static ConeRegion trapezoid(double t0, double t1, double vertex_time = 0.0);

  Kind kind() const { return kind_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  double vertex_time() const { return vertex_time_; }

  /// Simulation time corresponding to cone time tau.
  double sim_time(double tau) const { return vertex_time_ - tau; }

  /// Exact membership of the point (tau, r), r >= 0.
  bool contains(double tau, double r) const;

  /// The r-interval of the time slice at tau; nullopt when the slice is
  /// empty. Null segments yield degenerate intervals [r, r].
  std::optional<std::pair<double, double>> segment_at(double tau) const;

 private:
  ConeRegion(Kind k, double t0, double t1, double vertex_time);

  Kind kind_;
  double t0_;
  double t1_;
  double vertex_time_;
};

/// Free-function spellings used throughout the diagnostics.
inline bool region_contains(const ConeRegion& region, double tau, double r) {
  return region.contains(tau, r);
}
inline std::optional<std::pair<double, double>> region_segment_at_time(const ConeRegion& region,
                                                                       double tau) {
  return region.segment_at(tau);
}

}  // namespace skwv
