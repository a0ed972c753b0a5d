#include "gwalk/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace gwalk {

using detail::ipow;
using detail::KahanSum;

LatticeState init_state(const Qudit& phi0, const CoinParams& params) {
  LatticeState s{params, 0, 0, std::vector<complexd>(4)};
  for (int c = 0; c < 4; ++c) s.amp[static_cast<std::size_t>(c)] = phi0[c];
  return s;
}

LatticeState step(const LatticeState& state) {
  const double p = state.params.p, q = state.params.q;
  const double sq = std::sqrt(p * q);
  const int ro = state.radius;
  const int lo = state.side();

  // Coin first: phi = A psi on the old support.
  std::vector<complexd> phi(state.amp.size());
  for (std::size_t site = 0; site < phi.size() / 4; ++site) {
    const std::size_t b = 4 * site;
    const complexd v0 = state.amp[b], v1 = state.amp[b + 1];
    const complexd v2 = state.amp[b + 2], v3 = state.amp[b + 3];
    const complexd s01 = sq * (v0 + v1);
    const complexd s23 = sq * (v2 + v3);
    phi[b]     = -p * v0 + q * v1 + s23;
    phi[b + 1] =  q * v0 - p * v1 + s23;
    phi[b + 2] =  s01 - q * v2 + p * v3;
    phi[b + 3] =  s01 + p * v2 - q * v3;
  }

  // Then shift: component 1 moves toward -x, 2 toward +x, 3 toward -y, 4 toward +y.
  const int rn = ro + 1;
  const int ln = lo + 2;
  LatticeState out{state.params, state.t + 1, rn,
                   std::vector<complexd>(4 * static_cast<std::size_t>(ln) * ln)};
  auto src = [&](int x, int y, int c) -> complexd {
    if (std::abs(x) > ro || std::abs(y) > ro) return {0.0, 0.0};
    return phi[4 * (static_cast<std::size_t>(x + ro) * lo +
                    static_cast<std::size_t>(y + ro)) + static_cast<std::size_t>(c)];
  };
  for (int x = -rn; x <= rn; ++x) {
    for (int y = -rn; y <= rn; ++y) {
      const std::size_t b = out.index(x, y, 0);
      out.amp[b]     = src(x + 1, y, 0);
      out.amp[b + 1] = src(x - 1, y, 1);
      out.amp[b + 2] = src(x, y + 1, 2);
      out.amp[b + 3] = src(x, y - 1, 3);
    }
  }
  return out;
}

ProbField probability_map(const LatticeState& state) {
  ProbField f{state.t, state.radius,
              std::vector<double>(static_cast<std::size_t>(state.side()) * state.side())};
  for (std::size_t site = 0; site < f.prob.size(); ++site) {
    const std::size_t b = 4 * site;
    f.prob[site] = std::norm(state.amp[b]) + std::norm(state.amp[b + 1]) +
                   std::norm(state.amp[b + 2]) + std::norm(state.amp[b + 3]);
  }
  return f;
}

double total_probability(const LatticeState& state) {
  KahanSum s;
  for (const complexd& z : state.amp) s.add(std::norm(z));
  return s.sum;
}

double joint_moment(const LatticeState& state, int alpha, int beta) {
  const ProbField f = probability_map(state);
  KahanSum s;
  const int r = f.radius;
  for (int x = -r; x <= r; ++x) {
    const double xa = ipow(static_cast<double>(x), alpha);
    if (xa == 0.0) continue;
    for (int y = -r; y <= r; ++y) {
      const double yb = ipow(static_cast<double>(y), beta);
      if (yb == 0.0) continue;
      s.add(xa * yb * f.at(x, y));
    }
  }
  return s.sum;
}

std::vector<HistogramBin> pseudovelocity_histogram(const LatticeState& state, double cell) {
  if (state.t == 0) throw ZeroTime();
  if (!(cell > 0.0)) throw std::invalid_argument("histogram cell size must be positive");

  // Centers at i*cell; the covering of [-1,1]^2 keeps every cell that
  // intersects it with positive measure.
  const int imax = static_cast<int>(std::ceil(1.0 / cell + 0.5)) - 1;
  const int nbin = 2 * imax + 1;
  std::vector<double> mass(static_cast<std::size_t>(nbin) * nbin, 0.0);

  const ProbField f = probability_map(state);
  const double t = static_cast<double>(state.t);
  const int r = f.radius;
  auto bin_of = [&](int site) {
    int i = static_cast<int>(std::floor(site / t / cell + 0.5));
    return std::clamp(i, -imax, imax);
  };
  for (int x = -r; x <= r; ++x) {
    const int bx = bin_of(x);
    for (int y = -r; y <= r; ++y) {
      mass[static_cast<std::size_t>(bx + imax) * nbin + (bin_of(y) + imax)] += f.at(x, y);
    }
  }

  std::vector<HistogramBin> out;
  out.reserve(mass.size());
  for (int ix = -imax; ix <= imax; ++ix)
    for (int iy = -imax; iy <= imax; ++iy)
      out.push_back({ix * cell, iy * cell,
                     mass[static_cast<std::size_t>(ix + imax) * nbin + (iy + imax)]});
  return out;
}

}  // namespace gwalk
