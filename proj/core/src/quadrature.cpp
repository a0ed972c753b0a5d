#include "gwalk/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gwalk {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  GaussLegendre g;
  g.x.assign(static_cast<std::size_t>(n), 0.0);
  g.w.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th root of P_n, refined by Newton.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    // Re-evaluate the derivative at the converged node for the weight.
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    g.x[static_cast<std::size_t>(i)] = -x;
    g.w[static_cast<std::size_t>(i)] = w;
    g.x[static_cast<std::size_t>(n - 1 - i)] = x;
    g.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) {
    // Odd rules have a node exactly at the origin; the loop above computed it
    // with x ~ 0, keep it exact.
    g.x[static_cast<std::size_t>(half - 1)] = 0.0;
  }
  return g;
}

}  // namespace gwalk
