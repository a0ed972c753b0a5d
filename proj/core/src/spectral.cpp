#include "gwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "gwalk/coin.hpp"
#include "internal.hpp"

namespace gwalk {

namespace {

// Closed-form eigenvector columns, unnormalized. For lambda = e^{+-i omega}
// these vanish identically on the lines ky = +-kx; callers test the norm and
// fall back to a generic eigensolve there.
Eigen::Vector4cd formula_vector(const CoinParams& params, double kx, double ky,
                                const complexd& lam) {
  const double s = std::sqrt(params.p * params.q);
  const complexd ap = std::polar(1.0, kx) * lam + 1.0;
  const complexd am = std::polar(1.0, -kx) * lam + 1.0;
  const complexd bp = std::polar(1.0, ky) * lam + 1.0;
  const complexd bm = std::polar(1.0, -ky) * lam + 1.0;
  Eigen::Vector4cd v;
  v << params.q * bp * ap * bm,
       params.q * bp * am * bm,
       s * bp * am * ap,
       s * am * ap * bm;
  return v;
}

double cos_omega(const CoinParams& params, double kx, double ky) {
  return -(params.p * std::cos(kx) + params.q * std::cos(ky));
}

}  // namespace

double dispersion(const CoinParams& params, const WaveNumber& k) {
  return std::acos(std::clamp(cos_omega(params, k.kx, k.ky), -1.0, 1.0));
}

std::pair<double, double> group_velocity(const CoinParams& params, const WaveNumber& k) {
  const double cw = cos_omega(params, k.kx, k.ky);
  const double den = std::sqrt(std::max(1.0 - cw * cw, 0.0));
  if (den < 1e-14) throw DegeneratePoint(k.kx, k.ky);
  return {-params.p * std::sin(k.kx) / den, -params.q * std::sin(k.ky) / den};
}

Eigensystem eigensystem(const CoinParams& params, const WaveNumber& k) {
  const double omega = dispersion(params, k);
  if (omega < 1e-10 || pi - omega < 1e-10) throw DegeneratePoint(k.kx, k.ky);

  Eigensystem out;
  out.omega = omega;
  out.fallback_used = false;
  out.lambdas = {complexd(1.0, 0.0), complexd(-1.0, 0.0),
                 std::polar(1.0, omega), std::polar(1.0, -omega)};

  std::optional<Eigen::ComplexEigenSolver<Eigen::Matrix4cd>> solver;
  for (int j = 0; j < 4; ++j) {
    const Eigen::Vector4cd v = formula_vector(params, k.kx, k.ky, out.lambdas[j]);
    const double n = v.norm();
    if (n < 1e-10) {
      out.fallback_used = true;
      if (!solver) solver.emplace(evolution_matrix(params, k));
      int best = 0;
      double dist = std::abs(solver->eigenvalues()(0) - out.lambdas[j]);
      for (int m = 1; m < 4; ++m) {
        const double d = std::abs(solver->eigenvalues()(m) - out.lambdas[j]);
        if (d < dist) { dist = d; best = m; }
      }
      out.vectors[j] = solver->eigenvectors().col(best).normalized();
    } else {
      out.vectors[j] = v / n;
    }
  }
  return out;
}

SpectralWeights spectral_weights(const Eigensystem& eig, const Qudit& phi0) {
  Eigen::Vector4cd phi;
  phi << phi0[0], phi0[1], phi0[2], phi0[3];
  SpectralWeights w;
  for (int j = 0; j < 4; ++j) w.c[j] = eig.vectors[j].dot(phi);
  return w;
}

LatticeState spectral_evolve(const CoinParams& params, const Qudit& phi0, int t, int N) {
  if (t < 0) throw std::invalid_argument("time must be non-negative");
  if (N < 2 * t + 3) throw GridTooSmall(N, t);
  if (t == 0) return init_state(phi0, params);

  Eigen::Vector4cd phi;
  phi << phi0[0], phi0[1], phi0[2], phi0[3];

  std::vector<double> kgrid(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) kgrid[static_cast<std::size_t>(j)] = -pi + 2.0 * pi * j / N;

  // psihat(jx, jy) = V(k)^t phi by repeated multiplication; stable at the
  // degenerate k-points the plain grid contains.
  std::vector<Eigen::Vector4cd> psihat(static_cast<std::size_t>(N) * N);
  for (int jx = 0; jx < N; ++jx) {
    for (int jy = 0; jy < N; ++jy) {
      const Eigen::Matrix4cd v =
          evolution_matrix(params, WaveNumber(kgrid[jx], kgrid[jy]));
      Eigen::Vector4cd acc = phi;
      for (int step = 0; step < t; ++step) acc = v * acc;
      psihat[static_cast<std::size_t>(jx) * N + jy] = acc;
    }
  }

  // Inverse transform, separable: psi(x,y) = (1/N^2) sum_k e^{i(kx x + ky y)} psihat.
  const int L = 2 * t + 1;
  std::vector<complexd> twiddle(static_cast<std::size_t>(L) * N);
  for (int x = -t; x <= t; ++x)
    for (int j = 0; j < N; ++j)
      twiddle[static_cast<std::size_t>(x + t) * N + j] = std::polar(1.0, kgrid[j] * x);

  std::vector<Eigen::Vector4cd> g(static_cast<std::size_t>(L) * N);
  for (int x = -t; x <= t; ++x) {
    for (int jy = 0; jy < N; ++jy) {
      Eigen::Vector4cd acc = Eigen::Vector4cd::Zero();
      for (int jx = 0; jx < N; ++jx)
        acc += twiddle[static_cast<std::size_t>(x + t) * N + jx] *
               psihat[static_cast<std::size_t>(jx) * N + jy];
      g[static_cast<std::size_t>(x + t) * N + jy] = acc;
    }
  }

  LatticeState out{params, t, t, std::vector<complexd>(4 * static_cast<std::size_t>(L) * L)};
  const double scale = 1.0 / (static_cast<double>(N) * N);
  for (int x = -t; x <= t; ++x) {
    for (int y = -t; y <= t; ++y) {
      Eigen::Vector4cd acc = Eigen::Vector4cd::Zero();
      for (int jy = 0; jy < N; ++jy)
        acc += twiddle[static_cast<std::size_t>(y + t) * N + jy] *
               g[static_cast<std::size_t>(x + t) * N + jy];
      const std::size_t b = out.index(x, y, 0);
      for (int c = 0; c < 4; ++c) out.amp[b + c] = scale * acc(c);
    }
  }
  return out;
}

double limit_moment_kspace(const CoinParams& params, const Qudit& phi0,
                           int alpha, int beta, int N) {
  if (N < 64) throw std::invalid_argument("k-space quadrature needs N >= 64");

  Eigen::Vector4cd phi;
  phi << phi0[0], phi0[1], phi0[2], phi0[3];
  const double sign = ((alpha + beta) % 2 == 0) ? 1.0 : -1.0;

  auto weight_sq = [&](double kx, double ky, const complexd& lam,
                       std::optional<Eigen::ComplexEigenSolver<Eigen::Matrix4cd>>& solver)
      -> double {
    const Eigen::Vector4cd v = formula_vector(params, kx, ky, lam);
    const double n2 = v.squaredNorm();
    if (n2 >= 1e-20) return std::norm(v.dot(phi)) / n2;
    if (!solver)
      solver.emplace(evolution_matrix(params, WaveNumber(kx, ky)));
    int best = 0;
    double dist = std::abs(solver->eigenvalues()(0) - lam);
    for (int m = 1; m < 4; ++m) {
      const double d = std::abs(solver->eigenvalues()(m) - lam);
      if (d < dist) { dist = d; best = m; }
    }
    return std::norm(solver->eigenvectors().col(best).normalized().dot(phi));
  };

  detail::KahanSum acc;
  for (int jx = 0; jx < N; ++jx) {
    const double kx = -pi + (2.0 * pi / N) * (jx + 0.5);
    for (int jy = 0; jy < N; ++jy) {
      const double ky = -pi + (2.0 * pi / N) * (jy + 0.5);
      const double cw = cos_omega(params, kx, ky);
      const double den = std::sqrt(std::max(1.0 - cw * cw, 0.0));
      const double dwx = -params.p * std::sin(kx) / den;
      const double dwy = -params.q * std::sin(ky) / den;
      const double omega = std::acos(std::clamp(cw, -1.0, 1.0));
      std::optional<Eigen::ComplexEigenSolver<Eigen::Matrix4cd>> solver;
      const double c3sq = weight_sq(kx, ky, std::polar(1.0, omega), solver);
      const double c4sq = weight_sq(kx, ky, std::polar(1.0, -omega), solver);
      acc.add((sign * c3sq + c4sq) * detail::ipow(dwx, alpha) * detail::ipow(dwy, beta));
    }
  }
  return acc.sum / (static_cast<double>(N) * N);
}

}  // namespace gwalk
