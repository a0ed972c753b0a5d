#pragma once

#include <utility>

#include "gwalk/types.hpp"

namespace gwalk {

struct KonnoDensityParams {
  double a;
  explicit KonnoDensityParams(double a_) : a(a_) {
    if (!(std::abs(a_) > 0.0 && std::abs(a_) < 1.0))
      throw std::invalid_argument("konno density parameter must satisfy 0 < |a| < 1");
  }
};

// mu(x; a) = sqrt(1-a^2) / (pi (1-x^2) sqrt(a^2-x^2)) on |x| < |a|, else 0.
double konno_density(double x, const KonnoDensityParams& params);

struct CheckPair {
  double numeric;
  double closed;
};

struct ComplexCheckPair {
  complexd numeric;
  complexd closed;
};

// int_0^1 x/((1-a^2 x^2) sqrt(1-x^2)) dx vs arcsin(a)/(a sqrt(1-a^2)),
// quadrature through x = sin u.
CheckPair arcsine_integral_check(double a);

// Contour integral of f(z) = z^3 / prod (z -+ z_+)(z -+ z_-)(z -+ conj z_+)(z -+ conj z_-)
// over the unit circle (trapezoid in angle) vs the closed form
// J(r) = (pi i / 2^4) r^4 / sqrt(1-r^2) {1/(1-p r^2) + 1/(1-q r^2)}.
// Throws PoleOnContour if a pole modulus is within 1e-8 of 1.
ComplexCheckPair contour_J_check(double r, const CoinParams& params, int nodes = 4096);

// Res(f, z_-) by a small-circle average around the pole vs the printed
// closed form.
ComplexCheckPair residue_check(double r, const CoinParams& params);

// lhs = (1/2) integral of mu_p (by the ellipse quadrature), rhs = the two
// one-dimensional Konno half-moments.
CheckPair identity1_check(const CoinParams& params);

struct IxIyPair {
  CheckPair ix;
  CheckPair iy;
};

// Ellipse quadrature of vx^2/D and vy^2/D vs
// I_x = pi(arcsin sqrt p - sqrt(pq)), I_y = pi(arcsin sqrt q - sqrt(pq)).
IxIyPair ix_iy_check(const CoinParams& params);

// pi(arcsin sqrt p + arcsin sqrt q); equals pi^2/2 for every p.
double normalization_I_closed(const CoinParams& params);

}  // namespace gwalk
