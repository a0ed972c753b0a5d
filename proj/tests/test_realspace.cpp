#include <doctest.h>

#include <cmath>

#include "gwalk/lattice.hpp"
#include "gwalk/presets.hpp"

using namespace gwalk;

namespace {

const Qudit kEast{{complexd(1.0), complexd(0.0), complexd(0.0), complexd(0.0)}};

LatticeState evolve(const Qudit& phi0, const CoinParams& params, int t) {
  LatticeState s = init_state(phi0, params);
  for (int i = 0; i < t; ++i) s = step(s);
  return s;
}

}  // namespace

TEST_CASE("initial state is a delta at the origin") {
  const CoinParams params(0.25);
  const LatticeState s = init_state(kEast, params);
  CHECK(s.t == 0);
  const ProbField prob = probability_map(s);
  CHECK(prob.at(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(total_probability(s) == doctest::Approx(1.0).epsilon(1e-15));

  const LatticeState g = init_state(preset_qudit("grover-sym", params), params);
  for (int c = 0; c < 4; ++c)
    CHECK(g.amplitude(0, 0, c) == complexd(0.5, 0.0));
}

TEST_CASE("one step from (1,0,0,0) lands p^2 left, q^2 right, pq up and down") {
  const CoinParams params(0.25);
  const LatticeState s = evolve(kEast, params, 1);
  const ProbField prob = probability_map(s);
  CHECK(prob.at(-1, 0) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(prob.at(1, 0) == doctest::Approx(9.0 / 16).epsilon(1e-14));
  CHECK(prob.at(0, 1) == doctest::Approx(3.0 / 16).epsilon(1e-14));
  CHECK(prob.at(0, -1) == doctest::Approx(3.0 / 16).epsilon(1e-14));
  CHECK(prob.at(0, 0) == 0.0);
  CHECK(prob.at(1, 1) == 0.0);

  const LatticeState u = evolve(kEast, CoinParams(0.5), 1);
  const ProbField up = probability_map(u);
  for (auto [x, y] : {std::pair{-1, 0}, {1, 0}, {0, 1}, {0, -1}})
    CHECK(up.at(x, y) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("probability is conserved and the support respects the light cone") {
  const CoinParams params(0.3);
  const LatticeState s = evolve(preset_qudit("fig3", params), params, 7);
  CHECK(std::abs(total_probability(s) - 1.0) < 1e-12);

  const ProbField prob = probability_map(s);
  double total = 0.0;
  for (int x = -prob.radius; x <= prob.radius; ++x)
    for (int y = -prob.radius; y <= prob.radius; ++y) {
      const double value = prob.at(x, y);
      total += value;
      if (value > 0.0) {
        CHECK(std::abs(x) + std::abs(y) <= s.t);
        CHECK((x + y + s.t) % 2 == 0);
      }
    }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("joint moments of the one-step distribution") {
  const CoinParams params(0.25);
  CHECK(joint_moment(init_state(kEast, params), 1, 0) == 0.0);

  const LatticeState s = evolve(kEast, params, 1);
  CHECK(joint_moment(s, 1, 0) == doctest::Approx(0.5).epsilon(1e-14));    // q^2 - p^2
  CHECK(joint_moment(s, 2, 0) == doctest::Approx(0.625).epsilon(1e-14));  // q^2 + p^2
  CHECK(joint_moment(s, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pseudovelocity histogram bins and edge cases") {
  const CoinParams params(0.5);
  const LatticeState s = evolve(kEast, params, 1);

  SUBCASE("a single covering cell holds all the mass") {
    const auto bins = pseudovelocity_histogram(s, 2.0);
    REQUIRE(bins.size() == 1);
    CHECK(bins[0].vx == 0.0);
    CHECK(bins[0].vy == 0.0);
    CHECK(bins[0].mass == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("unit cells put 1/4 in each of the four neighbor bins") {
    const auto bins = pseudovelocity_histogram(s, 1.0);
    double total = 0.0;
    int quarters = 0;
    for (const HistogramBin& b : bins) {
      total += b.mass;
      if (b.mass > 0.0) {
        CHECK(b.mass == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(std::abs(b.vx) + std::abs(b.vy) == doctest::Approx(1.0));
        ++quarters;
      }
    }
    CHECK(quarters == 4);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("mass is conserved for a generic cell size") {
    const LatticeState s9 = evolve(preset_qudit("fig4", params), params, 9);
    const auto bins = pseudovelocity_histogram(s9, 0.05);
    double total = 0.0;
    for (const HistogramBin& b : bins) total += b.mass;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }

  SUBCASE("t = 0 and non-positive cells are rejected") {
    CHECK_THROWS_AS(pseudovelocity_histogram(init_state(kEast, params), 0.1), ZeroTime);
    CHECK_THROWS_AS(pseudovelocity_histogram(s, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pseudovelocity_histogram(s, -0.5), std::invalid_argument);
  }
}
