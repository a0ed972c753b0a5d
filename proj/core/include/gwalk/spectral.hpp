#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>

#include "gwalk/lattice.hpp"
#include "gwalk/types.hpp"

namespace gwalk {

// omega(k) = arccos(-(p cos kx + q cos ky)), in [0, pi].
double dispersion(const CoinParams& params, const WaveNumber& k);

// (d omega/d kx, d omega/d ky); throws DegeneratePoint where the dispersion
// is not differentiable (omega in {0, pi}).
std::pair<double, double> group_velocity(const CoinParams& params, const WaveNumber& k);

struct Eigensystem {
  std::array<complexd, 4> lambdas;             // 1, -1, e^{i omega}, e^{-i omega}
  std::array<Eigen::Vector4cd, 4> vectors;     // unit norm, phase as produced
  double omega;
  bool fallback_used;                          // generic eigensolve substituted
};

// Eigenpairs of V(k) from the closed-form column vectors; falls back to a
// generic unitary eigensolve where a formula vector degenerates (norm < 1e-10,
// which happens on the lines ky = +-kx for the e^{+-i omega} pair).
Eigensystem eigensystem(const CoinParams& params, const WaveNumber& k);

struct SpectralWeights {
  std::array<complexd, 4> c;  // c_j = v_j^dagger phi_0
};

SpectralWeights spectral_weights(const Eigensystem& eig, const Qudit& phi0);

// Independent evolution oracle: samples V(k)^t phi_0 on the uniform grid
// k_j = -pi + 2 pi j / N by repeated multiplication and inverse-transforms to
// the lattice. Equals t real-space steps up to roundoff when N >= 2t+3.
LatticeState spectral_evolve(const CoinParams& params, const Qudit& phi0, int t, int N);

// Absolutely-continuous part of the limit moment by midpoint quadrature of
// {(-1)^{alpha+beta}|C_3|^2 + |C_4|^2} (d omega/d kx)^alpha (d omega/d ky)^beta
// on the half-offset grid k_j = -pi + (2 pi/N)(j + 1/2).
double limit_moment_kspace(const CoinParams& params, const Qudit& phi0,
                           int alpha, int beta, int N = 512);

}  // namespace gwalk
