#include <doctest.h>

#include <random>

#include "skwv/cone_region.hpp"
#include "skwv/grid.hpp"

using namespace skwv;

TEST_CASE("make_grid places staggered nodes") {
  const GridSpec g = make_grid(10.0, 8);
  CHECK(g.dr == doctest::Approx(1.25));
  CHECK(g.node(0) == doctest::Approx(0.625));
  CHECK(g.node(7) == doctest::Approx(9.375));

  const GridSpec g2 = make_grid(1.0, 8);
  CHECK(g2.node(0) == doctest::Approx(0.0625));
  CHECK(g2.node(7) == doctest::Approx(0.9375));
  const Eigen::ArrayXd r = g2.nodes();
  for (int j = 1; j < g2.n_cells; ++j) CHECK(r[j] > r[j - 1]);
  CHECK(r[g2.n_cells - 1] == doctest::Approx(g2.r_max - g2.dr / 2));
}

TEST_CASE("make_grid rejects bad arguments") {
  CHECK_THROWS_AS(make_grid(10.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-1.0, 64), std::invalid_argument);
}

TEST_CASE("region membership matches the set definitions") {
  const auto K1 = ConeRegion::backward_cone(1.0);
  CHECK(K1.contains(1.5, 0.5));
  CHECK_FALSE(K1.contains(1.5, 0.6));

  const auto C = ConeRegion::forward_cone(0.5, 1.0);
  CHECK(C.contains(0.7, 0.7));
  CHECK_FALSE(C.contains(0.4, 0.4));
  CHECK_FALSE(C.contains(0.7, 0.6));

  const auto D = ConeRegion::trapezoid(0.5, 1.0);
  CHECK_FALSE(D.contains(0.4, 0.3));  // r < 2 t0 - tau = 0.6
  CHECK(D.contains(0.8, 0.5));
}

TEST_CASE("region slices") {
  const auto D = ConeRegion::trapezoid(0.5, 1.0);
  const auto seg = D.segment_at(0.8);
  REQUIRE(seg.has_value());
  CHECK(seg->first == doctest::Approx(0.2));
  CHECK(seg->second == doctest::Approx(0.8));

  const auto ball = ConeRegion::ball_slice(1.0);
  const auto bseg = ball.segment_at(1.0);
  REQUIRE(bseg.has_value());
  CHECK(bseg->first == 0.0);
  CHECK(bseg->second == 1.0);
  CHECK_FALSE(ball.segment_at(0.99).has_value());

  const auto shifted = ConeRegion::shifted_cone(0.25, 1.0);
  const auto sseg = shifted.segment_at(1.0);
  REQUIRE(sseg.has_value());
  CHECK(sseg->first == doctest::Approx(0.5));
  CHECK(sseg->second == doctest::Approx(0.5));
  CHECK_FALSE(shifted.segment_at(1.4).has_value());  // r = 0.9 > t1 - t0
}

TEST_CASE("trapezoid slice endpoints satisfy the defining inequalities") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const double t0 = 0.1 + unit(rng);
    const double t1 = t0 + 0.1 + unit(rng);
    const auto D = ConeRegion::trapezoid(t0, t1);
    const double tau = t0 + (2.0 * t1 - t0) * unit(rng);
    const auto seg = D.segment_at(tau);
    if (!seg) continue;
    for (double r : {seg->first, seg->second, 0.5 * (seg->first + seg->second)}) {
      CHECK(2.0 * t0 - tau <= r + 1e-12);
      CHECK(r <= std::min(2.0 * t1 - tau, tau) + 1e-12);
      CHECK(D.contains(tau, r));
    }
  }
}

TEST_CASE("backward cone and ball slice bound a solid cone") {
  // characteristic tau = 2 t0 - r meets the slice tau = t0 at r = t0
  for (double t0 : {0.5, 1.0, 2.5}) {
    const double r_meet = 2.0 * t0 - t0;
    CHECK(r_meet == doctest::Approx(t0));
    CHECK(ConeRegion::backward_cone(t0).contains(t0, t0));
    CHECK(ConeRegion::ball_slice(t0).contains(t0, t0));
    // disjoint slices away from tau = t0
    const auto kseg = ConeRegion::backward_cone(t0).segment_at(1.5 * t0);
    REQUIRE(kseg.has_value());
    CHECK_FALSE(ConeRegion::ball_slice(t0).segment_at(1.5 * t0).has_value());
  }
}

TEST_CASE("contains agrees with segment_at on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto regions = {ConeRegion::ball_slice(0.8), ConeRegion::backward_cone(0.9),
                        ConeRegion::forward_cone(0.3, 1.1), ConeRegion::shifted_cone(0.2, 1.0),
                        ConeRegion::trapezoid(0.4, 1.2)};
  for (const auto& region : regions) {
    for (int k = 0; k < 10000; ++k) {
      const double tau = 3.0 * unit(rng);
      const double r = 3.0 * unit(rng);
      const auto seg = region.segment_at(tau);
      const bool inside = seg && seg->first <= r && r <= seg->second;
      CHECK(region.contains(tau, r) == inside);
    }
    // and on constructed slice points
    for (int k = 0; k < 100; ++k) {
      const double tau = 3.0 * unit(rng);
      const auto seg = region.segment_at(tau);
      if (!seg) continue;
      CHECK(region.contains(tau, seg->first));
      CHECK(region.contains(tau, seg->second));
    }
  }
}

TEST_CASE("two-parameter regions validate their interval") {
  CHECK_THROWS_AS(ConeRegion::trapezoid(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ConeRegion::forward_cone(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ConeRegion::backward_cone(0.0), std::invalid_argument);
}

TEST_CASE("sim_time maps cone time through the vertex") {
  const auto K = ConeRegion::backward_cone(1.0, 5.0);
  CHECK(K.sim_time(1.0) == doctest::Approx(4.0));
  CHECK(K.sim_time(2.0) == doctest::Approx(3.0));
}
