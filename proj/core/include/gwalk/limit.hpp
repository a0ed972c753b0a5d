#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>

#include "gwalk/quadrature.hpp"
#include "gwalk/types.hpp"

namespace gwalk {

// Fundamental density 2/(pi^2 D(v)) on the open ellipse vx^2/p + vy^2/q < 1,
// zero outside. The denominator is grouped as
// ((vx+vy+1)(vx-vy+1)) * ((vx+vy-1)(vx-vy-1)) so that evaluation is exactly
// even in each argument in floating point.
double mu_p(const CoinParams& params, double vx, double vy);

// (vx, vy) = (p sin kx, q sin ky)/sqrt(1 - (p cos kx + q cos ky)^2); lands in
// the closed ellipse. Throws DegeneratePoint with group_velocity.
std::pair<double, double> velocity_map(const CoinParams& params, const WaveNumber& k);

struct InverseTrig {
  double sin_kx;
  double cos_kx;
  double sin_ky;
  double cos_ky;
};

// Closed-form preimage trigonometry of velocity_map on the open ellipse.
// The map is one-to-two; the branch returned has sign(sin k) = sign(v)
// componentwise, and the second preimage negates both cosines jointly.
InverseTrig inverse_map_trig(const CoinParams& params, double vx, double vy);

// |d(vx,vy)/d(kx,ky)| = (1/4)|D(v)|.
double jacobian(double vx, double vy);

struct WeightCoefficients {
  double m1, m2, m3, m4, m5, m6;
};

// The six coefficients of M(v) = M1 + M2 vx + M3 vy + M4 vx^2 + M5 vy^2 + M6 vx vy.
WeightCoefficients weight_coeffs(const CoinParams& params, const Qudit& phi0);

// Real symmetric matrices with M_n = phi0^dagger Mn phi0.
std::array<Eigen::Matrix4d, 6> weight_matrices(const CoinParams& params);

inline double weight_poly(const WeightCoefficients& m, double vx, double vy) {
  return m.m1 + m.m2 * vx + m.m3 * vy + m.m4 * (vx * vx) + m.m5 * (vy * vy) +
         m.m6 * (vx * vy);
}

// K_x = (2/pi)(arcsin sqrt(p) - sqrt(pq)), K_y the same with p and q swapped.
std::pair<double, double> kxy_constants(const CoinParams& params);

// Point mass at the origin, Delta = 1 - M1 - K_x M4 - K_y M5. Cancellation
// noise in [-1e-9, 0) clamps to 0; anything lower throws NegativeMass.
double localization_delta(const CoinParams& params, const Qudit& phi0);

// Independent route, 1 - integral of mu_p * M over the ellipse.
double localization_delta_quadrature(const CoinParams& params, const Qudit& phi0,
                                     const QuadratureSpec& spec = {});

// Absolutely continuous density mu_p * M at a point, with the point mass
// reported separately (a delta function is never sampled pointwise).
std::pair<double, double> limit_density(const CoinParams& params, const Qudit& phi0,
                                        double vx, double vy);

// Moment of the limit measure nu; the point mass contributes only at
// (alpha, beta) = (0, 0).
double limit_moment(const CoinParams& params, const Qudit& phi0, int alpha, int beta,
                    const QuadratureSpec& spec = {});

// Bundled evaluator for one (p, phi0): coefficients and point mass computed
// once, smooth part sampled pointwise.
struct LimitDistribution {
  CoinParams params;
  Qudit phi0;
  WeightCoefficients coeffs;
  double delta;

  double density(double vx, double vy) const {
    return mu_p(params, vx, vy) * weight_poly(coeffs, vx, vy);
  }
};

LimitDistribution limit_distribution(const CoinParams& params, const Qudit& phi0);

struct SymmetryClass {
  bool reflect_x = false;
  bool reflect_y = false;
  bool reflect_both = false;
  bool birotational = false;
  bool none() const { return !(reflect_x || reflect_y || reflect_both || birotational); }
};

// reflect_x:    |M3|,|M6| <= tol   (density even in vy)
// reflect_y:    |M2|,|M6| <= tol   (density even in vx)
// reflect_both: |M2|,|M3|,|M6| <= tol
// birotational: |M2|,|M3| <= tol   (density invariant under v -> -v)
SymmetryClass classify_symmetry(const WeightCoefficients& coeffs, double tol = 1e-12);

}  // namespace gwalk
