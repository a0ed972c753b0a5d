#include "gwalk/coin.hpp"

#include <cmath>

namespace gwalk {

Eigen::Matrix4d coin_matrix(const CoinParams& params) {
  const double p = params.p, q = params.q;
  const double s = std::sqrt(p * q);
  Eigen::Matrix4d a;
  a << -p,  q,  s,  s,
        q, -p,  s,  s,
        s,  s, -q,  p,
        s,  s,  p, -q;
  return a;
}

Eigen::Matrix4cd evolution_matrix(const CoinParams& params, const WaveNumber& k) {
  const complexd ex = std::polar(1.0, k.kx);
  const complexd ey = std::polar(1.0, k.ky);
  Eigen::Vector4cd phases;
  phases << ex, std::conj(ex), ey, std::conj(ey);
  return phases.asDiagonal() * coin_matrix(params).cast<complexd>();
}

}  // namespace gwalk
