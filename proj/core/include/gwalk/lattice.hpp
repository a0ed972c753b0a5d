#pragma once

#include <cstdlib>
#include <vector>

#include "gwalk/types.hpp"

namespace gwalk {

// Four-component wave function on the square [-radius, radius]^2, stored
// dense and site-major. Treat as immutable once produced; step() returns a
// new state one site wider so the support never wraps.
struct LatticeState {
  CoinParams params;
  int t;
  int radius;
  std::vector<complexd> amp;  // 4 * (2*radius+1)^2

  int side() const { return 2 * radius + 1; }
  std::size_t index(int x, int y, int c) const {
    return 4 * (static_cast<std::size_t>(x + radius) * side() +
                static_cast<std::size_t>(y + radius)) + static_cast<std::size_t>(c);
  }
  complexd amplitude(int x, int y, int c) const {
    if (std::abs(x) > radius || std::abs(y) > radius) return {0.0, 0.0};
    return amp[index(x, y, c)];
  }
};

struct ProbField {
  int t;
  int radius;
  std::vector<double> prob;  // (2*radius+1)^2, site-major

  int side() const { return 2 * radius + 1; }
  double at(int x, int y) const {
    if (std::abs(x) > radius || std::abs(y) > radius) return 0.0;
    return prob[static_cast<std::size_t>(x + radius) * side() +
                static_cast<std::size_t>(y + radius)];
  }
};

struct HistogramBin {
  double vx;  // cell center
  double vy;
  double mass;
};

LatticeState init_state(const Qudit& phi0, const CoinParams& params);
LatticeState step(const LatticeState& state);
ProbField probability_map(const LatticeState& state);
double total_probability(const LatticeState& state);

// Exact finite sum of x^alpha y^beta P(x,y,t), compensated.
double joint_moment(const LatticeState& state, int alpha, int beta);

// Bins P(x,y,t) by (x/t, y/t) into square cells of side `cell` whose centers
// sit at integer multiples of `cell`; cells cover [-1,1]^2 and boundary mass
// is clamped into the covering cells. Throws ZeroTime at t = 0.
std::vector<HistogramBin> pseudovelocity_histogram(const LatticeState& state, double cell);

}  // namespace gwalk
