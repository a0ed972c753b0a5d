#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gwalk/types.hpp"

namespace gwalk {

struct GaussLegendre {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

GaussLegendre gauss_legendre(int n);

// Resolution of the ellipse integrator: nu Gauss-Legendre nodes in u and
// ntheta angular nodes split evenly over four panels.
struct QuadratureSpec {
  int nu = 1024;
  int ntheta = 1024;
};

// Integral over the ellipse vx^2/p + vy^2/q < 1 of f(vx, vy) dvx dvy.
//
// Substitution: vx = sqrt(p) r cos(theta), vy = sqrt(q) r sin(theta) with
// r = sin(u), u in [0, pi/2]. The integrands of interest (mu_p times
// polynomials) still blow up like 1/distance at the four boundary points
// where the ellipse touches the square |vx|+|vy| = 1, i.e. at the angles
// theta0 = atan2(sqrt(q), sqrt(p)), pi - theta0, pi + theta0, 2 pi - theta0.
// A plain product rule stalls at ~1e-3 accuracy there, so theta is split at
// those angles and each panel is mapped through a cosine change of variable
// whose derivative vanishes at the panel ends; Gauss-Legendre nodes in both
// directions then converge fast (validated well below 1e-8 by doubling).
template <class F>
double ellipse_integrate(const CoinParams& params, F&& f,
                         const QuadratureSpec& spec = {}) {
  if (spec.nu < 4) throw std::invalid_argument("quadrature nu must be >= 4");
  if (spec.ntheta < 16 || spec.ntheta % 4 != 0)
    throw std::invalid_argument("quadrature ntheta must be >= 16 and divisible by 4");

  const double sp = std::sqrt(params.p);
  const double sq = std::sqrt(params.q);
  const double spq = sp * sq;
  const double theta0 = std::atan2(sq, sp);

  const GaussLegendre gu = gauss_legendre(spec.nu);
  const GaussLegendre gt = gauss_legendre(spec.ntheta / 4);

  const int nu = spec.nu;
  std::vector<double> r(nu), rw(nu);
  for (int i = 0; i < nu; ++i) {
    const double u = (gu.x[i] + 1.0) * (pi / 4.0);
    r[i] = std::sin(u);
    rw[i] = spq * r[i] * std::cos(u) * gu.w[i] * (pi / 4.0);
  }

  const double cuts[5] = {theta0, pi - theta0, pi + theta0,
                          2.0 * pi - theta0, 2.0 * pi + theta0};

  double sum = 0.0, comp = 0.0;  // Kahan
  for (int panel = 0; panel < 4; ++panel) {
    const double a = cuts[panel], b = cuts[panel + 1];
    for (std::size_t j = 0; j < gt.x.size(); ++j) {
      const double s = (gt.x[j] + 1.0) / 2.0;
      const double theta = a + (b - a) * (1.0 - std::cos(pi * s)) / 2.0;
      const double wt = gt.w[j] / 2.0 * (b - a) * (pi / 2.0) * std::sin(pi * s);
      const double ct = std::cos(theta), st = std::sin(theta);
      for (int i = 0; i < nu; ++i) {
        const double term = f(sp * r[i] * ct, sq * r[i] * st) * rw[i] * wt;
        const double y = term - comp;
        const double t2 = sum + y;
        comp = (t2 - sum) - y;
        sum = t2;
      }
    }
  }
  return sum;
}

}  // namespace gwalk
