#include "gwalk/appendix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "gwalk/limit.hpp"
#include "gwalk/quadrature.hpp"
#include "internal.hpp"

namespace gwalk {

namespace {

struct Poles {
  complexd zp, zm;  // z_+ and z_-; the full pole set is +-z_+-, +-conj z_+-
};

Poles poles_of(double r, const CoinParams& params) {
  const double root = std::sqrt(1.0 - r * r);
  const complexd base(std::sqrt(params.p), std::sqrt(params.q));
  return {base * ((1.0 + root) / r), base * ((1.0 - root) / r)};
}

complexd f_of(const complexd& z, const Poles& po) {
  const complexd zpc = std::conj(po.zp), zmc = std::conj(po.zm);
  const complexd den = (z - po.zp) * (z + po.zp) * (z - po.zm) * (z + po.zm) *
                       (z - zpc) * (z + zpc) * (z - zmc) * (z + zmc);
  return z * z * z / den;
}

void require_unit_interval(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument(std::string(what) + " must lie in (0, 1)");
}

// int_0^{a} x mu(x; a) dx with x = a sin u; the Konno measure mu(.; a) is even,
// so this is half its first absolute moment.
double konno_half_moment(double a, const GaussLegendre& g) {
  const double fac = std::sqrt(1.0 - a * a) / pi;
  detail::KahanSum acc;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const double u = (g.x[i] + 1.0) * (pi / 4.0);
    const double su = std::sin(u);
    acc.add(a * su * fac / (1.0 - a * a * su * su) * g.w[i] * (pi / 4.0));
  }
  return acc.sum;
}

}  // namespace

double konno_density(double x, const KonnoDensityParams& params) {
  const double a = std::abs(params.a);
  if (!(std::abs(x) < a)) return 0.0;
  return std::sqrt(1.0 - a * a) /
         (pi * (1.0 - x * x) * std::sqrt(a * a - x * x));
}

CheckPair arcsine_integral_check(double a) {
  if (!(std::abs(a) > 0.0 && std::abs(a) < 1.0))
    throw std::invalid_argument("arcsine check parameter must satisfy 0 < |a| < 1");
  const GaussLegendre g = gauss_legendre(64);
  detail::KahanSum acc;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const double u = (g.x[i] + 1.0) * (pi / 4.0);
    const double su = std::sin(u);
    acc.add(su / (1.0 - a * a * su * su) * g.w[i] * (pi / 4.0));
  }
  const double closed = std::asin(a) / (a * std::sqrt(1.0 - a * a));
  return {acc.sum, closed};
}

ComplexCheckPair contour_J_check(double r, const CoinParams& params, int nodes) {
  require_unit_interval(r, "contour radius");
  if (nodes < 16) throw std::invalid_argument("contour rule needs at least 16 nodes");
  const Poles po = poles_of(r, params);
  for (double mod : {std::abs(po.zp), std::abs(po.zm)})
    if (std::abs(mod - 1.0) < 1e-8) throw PoleOnContour(r);

  complexd num(0.0, 0.0);
  for (int j = 0; j < nodes; ++j) {
    const complexd z = std::polar(1.0, 2.0 * pi * j / nodes);
    num += f_of(z, po) * complexd(0.0, 1.0) * z;
  }
  num *= 2.0 * pi / nodes;

  const double root = std::sqrt(1.0 - r * r);
  const double r2 = r * r;
  const complexd closed = complexd(0.0, pi / 16.0) * (r2 * r2) / root *
                          (1.0 / (1.0 - params.p * r2) + 1.0 / (1.0 - params.q * r2));
  return {num, closed};
}

ComplexCheckPair residue_check(double r, const CoinParams& params) {
  require_unit_interval(r, "pole parameter");
  const Poles po = poles_of(r, params);
  const complexd zm = po.zm;

  const std::array<complexd, 7> others = {
      po.zp, -po.zp, std::conj(po.zp), -std::conj(po.zp),
      -zm, std::conj(zm), -std::conj(zm)};
  double eps = std::abs(std::abs(zm) - 1.0);
  for (const complexd& w : others) eps = std::min(eps, std::abs(zm - w));
  eps /= 10.0;

  const int n = 256;
  complexd num(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    const complexd d = std::polar(eps, 2.0 * pi * j / n);
    num += f_of(zm + d, po) * d;
  }
  num /= static_cast<double>(n);

  const double p = params.p, q = params.q;
  const double root = std::sqrt(1.0 - r * r);
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const complexd closed =
      r4 / (128.0 * std::sqrt(p * q) * root) *
      complexd(std::sqrt(p), std::sqrt(q) * root) *
      complexd(std::sqrt(q), -std::sqrt(p) * root) /
      ((1.0 - p * r2) * (1.0 - q * r2));
  return {num, closed};
}

CheckPair identity1_check(const CoinParams& params) {
  const double lhs = 0.5 * ellipse_integrate(
      params, [&](double vx, double vy) { return mu_p(params, vx, vy); }, {});
  const GaussLegendre g = gauss_legendre(128);
  const double rhs = konno_half_moment(std::sqrt(params.p), g) +
                     konno_half_moment(std::sqrt(params.q), g);
  return {lhs, rhs};
}

IxIyPair ix_iy_check(const CoinParams& params) {
  const double half_pi2 = pi * pi / 2.0;
  // 1/D = (pi^2/2) mu_p on the open ellipse.
  const double ix_num = ellipse_integrate(
      params,
      [&](double vx, double vy) { return vx * vx * half_pi2 * mu_p(params, vx, vy); }, {});
  const double iy_num = ellipse_integrate(
      params,
      [&](double vx, double vy) { return vy * vy * half_pi2 * mu_p(params, vx, vy); }, {});
  const double s = std::sqrt(params.p * params.q);
  const double ix_closed = pi * (std::asin(std::sqrt(params.p)) - s);
  const double iy_closed = pi * (std::asin(std::sqrt(params.q)) - s);
  return {{ix_num, ix_closed}, {iy_num, iy_closed}};
}

double normalization_I_closed(const CoinParams& params) {
  return pi * (std::asin(std::sqrt(params.p)) + std::asin(std::sqrt(params.q)));
}

}  // namespace gwalk
