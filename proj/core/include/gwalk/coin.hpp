#pragma once

#include <Eigen/Dense>

#include "gwalk/types.hpp"

namespace gwalk {

// The coin A(p): real, symmetric, orthogonal; reduces to the Grover coin at p = 1/2.
Eigen::Matrix4d coin_matrix(const CoinParams& params);

// One-step evolution in wave-number space, V(k) = S(k) A with
// S = diag(e^{i kx}, e^{-i kx}, e^{i ky}, e^{-i ky}).
Eigen::Matrix4cd evolution_matrix(const CoinParams& params, const WaveNumber& k);

}  // namespace gwalk
