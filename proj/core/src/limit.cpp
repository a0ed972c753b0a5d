#include "gwalk/limit.hpp"

#include <cmath>

#include "gwalk/spectral.hpp"
#include "internal.hpp"

namespace gwalk {

namespace {

// D(v) = (vx+vy+1)(vx-vy+1)(vx+vy-1)(vx-vy-1), grouped so the floating-point
// result is exactly invariant under vx -> -vx and vy -> -vy separately.
double ellipse_D(double vx, double vy) {
  const double f1 = vx + vy + 1.0;
  const double f2 = vx - vy + 1.0;
  const double f3 = vx + vy - 1.0;
  const double f4 = vx - vy - 1.0;
  return (f1 * f2) * (f3 * f4);
}

bool inside_ellipse(const CoinParams& params, double vx, double vy) {
  return vx * vx / params.p + vy * vy / params.q < 1.0;
}

}  // namespace

double mu_p(const CoinParams& params, double vx, double vy) {
  if (!inside_ellipse(params, vx, vy)) return 0.0;
  return 2.0 / (pi * pi * ellipse_D(vx, vy));
}

std::pair<double, double> velocity_map(const CoinParams& params, const WaveNumber& k) {
  const auto [gx, gy] = group_velocity(params, k);
  return {-gx, -gy};
}

InverseTrig inverse_map_trig(const CoinParams& params, double vx, double vy) {
  if (!inside_ellipse(params, vx, vy)) throw OutsideDomain(vx, vy);
  const double p = params.p, q = params.q;
  const double rad = std::sqrt(p * q - q * vx * vx - p * vy * vy);
  const double rootD = std::sqrt(ellipse_D(vx, vy));
  InverseTrig t;
  t.sin_kx = 2.0 * vx * rad / (p * rootD);
  t.cos_kx = ((1.0 + q) * vx * vx + p * vy * vy - p) / (p * rootD);
  t.sin_ky = 2.0 * vy * rad / (q * rootD);
  t.cos_ky = -(q * vx * vx + (1.0 + p) * vy * vy - q) / (q * rootD);
  return t;
}

double jacobian(double vx, double vy) {
  return 0.25 * std::abs(ellipse_D(vx, vy));
}

WeightCoefficients weight_coeffs(const CoinParams& params, const Qudit& phi0) {
  const double p = params.p, q = params.q;
  const double s = std::sqrt(p * q);
  const complexd q1 = phi0[0], q2 = phi0[1], q3 = phi0[2], q4 = phi0[3];
  const double n1 = std::norm(q1), n2 = std::norm(q2);
  const double n3 = std::norm(q3), n4 = std::norm(q4);
  const double r12 = (q1 * std::conj(q2)).real();
  const double r34 = (q3 * std::conj(q4)).real();
  const double r13 = (q1 * std::conj(q3)).real();
  const double r14 = (q1 * std::conj(q4)).real();
  const double r23 = (q2 * std::conj(q3)).real();
  const double r24 = (q2 * std::conj(q4)).real();

  WeightCoefficients m;
  m.m1 = 0.5 + r12 + r34;
  m.m2 = -(n1 - n2) + (q / s) * (r13 + r14 - r23 - r24);
  m.m3 = -(n3 - n4) + (p / s) * (r13 - r14 + r23 - r24);
  m.m4 = 0.5 * (n1 + n2 - n3 - n4) - ((1.0 + q) / p) * r12 - r34 -
         (q / s) * (r13 + r14 + r23 + r24);
  m.m5 = -0.5 * (n1 + n2 - n3 - n4) - r12 - ((1.0 + p) / q) * r34 -
         (p / s) * (r13 + r14 + r23 + r24);
  m.m6 = -(r13 - r14 - r23 + r24) / s;
  return m;
}

std::array<Eigen::Matrix4d, 6> weight_matrices(const CoinParams& params) {
  const double p = params.p, q = params.q;
  const double s = std::sqrt(p * q);
  std::array<Eigen::Matrix4d, 6> mats;

  mats[0] << 1, 1, 0, 0,
             1, 1, 0, 0,
             0, 0, 1, 1,
             0, 0, 1, 1;
  mats[0] *= 0.5;

  mats[1] << 2 * s, 0, -q, -q,
             0, -2 * s, q, q,
             -q, q, 0, 0,
             -q, q, 0, 0;
  mats[1] *= -1.0 / (2.0 * s);

  mats[2] << 0, 0, -p, p,
             0, 0, -p, p,
             -p, -p, 2 * s, 0,
             p, p, 0, -2 * s;
  mats[2] *= -1.0 / (2.0 * s);

  mats[3] << -1, (1 + q) / p, q / s, q / s,
             (1 + q) / p, -1, q / s, q / s,
             q / s, q / s, 1, 1,
             q / s, q / s, 1, 1;
  mats[3] *= -0.5;

  mats[4] << 1, 1, p / s, p / s,
             1, 1, p / s, p / s,
             p / s, p / s, -1, (1 + p) / q,
             p / s, p / s, (1 + p) / q, -1;
  mats[4] *= -0.5;

  mats[5] << 0, 0, -1, 1,
             0, 0, 1, -1,
             -1, 1, 0, 0,
             1, -1, 0, 0;
  mats[5] *= 1.0 / (2.0 * s);

  return mats;
}

std::pair<double, double> kxy_constants(const CoinParams& params) {
  const double s = std::sqrt(params.p * params.q);
  const double kx = (2.0 / pi) * (std::asin(std::sqrt(params.p)) - s);
  const double ky = (2.0 / pi) * (std::asin(std::sqrt(params.q)) - s);
  return {kx, ky};
}

double localization_delta(const CoinParams& params, const Qudit& phi0) {
  const WeightCoefficients m = weight_coeffs(params, phi0);
  const auto [kx, ky] = kxy_constants(params);
  double d = 1.0 - m.m1 - kx * m.m4 - ky * m.m5;
  if (d < 0.0) {
    if (d < -1e-9) throw NegativeMass(d);
    d = 0.0;
  }
  return d;
}

double localization_delta_quadrature(const CoinParams& params, const Qudit& phi0,
                                     const QuadratureSpec& spec) {
  const WeightCoefficients m = weight_coeffs(params, phi0);
  const double ac = ellipse_integrate(params,
      [&](double vx, double vy) { return mu_p(params, vx, vy) * weight_poly(m, vx, vy); },
      spec);
  return 1.0 - ac;
}

std::pair<double, double> limit_density(const CoinParams& params, const Qudit& phi0,
                                        double vx, double vy) {
  const WeightCoefficients m = weight_coeffs(params, phi0);
  const double ac = mu_p(params, vx, vy) * weight_poly(m, vx, vy);
  return {ac, localization_delta(params, phi0)};
}

double limit_moment(const CoinParams& params, const Qudit& phi0, int alpha, int beta,
                    const QuadratureSpec& spec) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("moment orders must be non-negative");
  const WeightCoefficients m = weight_coeffs(params, phi0);
  const double ac = ellipse_integrate(params,
      [&](double vx, double vy) {
        return detail::ipow(vx, alpha) * detail::ipow(vy, beta) *
               mu_p(params, vx, vy) * weight_poly(m, vx, vy);
      },
      spec);
  if (alpha == 0 && beta == 0) return ac + localization_delta(params, phi0);
  return ac;
}

LimitDistribution limit_distribution(const CoinParams& params, const Qudit& phi0) {
  return {params, phi0, weight_coeffs(params, phi0), localization_delta(params, phi0)};
}

SymmetryClass classify_symmetry(const WeightCoefficients& coeffs, double tol) {
  const bool z2 = std::abs(coeffs.m2) <= tol;
  const bool z3 = std::abs(coeffs.m3) <= tol;
  const bool z6 = std::abs(coeffs.m6) <= tol;
  SymmetryClass c;
  c.reflect_x = z3 && z6;
  c.reflect_y = z2 && z6;
  c.reflect_both = z2 && z3 && z6;
  c.birotational = z2 && z3;
  return c;
}

}  // namespace gwalk
