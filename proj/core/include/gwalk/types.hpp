#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gwalk {

using complexd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

struct NormError : std::runtime_error {
  double actual_norm;
  explicit NormError(double n)
      : std::runtime_error("qudit squared norm is " + std::to_string(n) +
                           ", must be 1 within 1e-9"),
        actual_norm(n) {}
};

struct DegeneratePoint : std::runtime_error {
  DegeneratePoint(double kx, double ky)
      : std::runtime_error("degenerate wave number (" + std::to_string(kx) +
                           ", " + std::to_string(ky) + ")") {}
};

struct OutsideDomain : std::runtime_error {
  OutsideDomain(double vx, double vy)
      : std::runtime_error("(" + std::to_string(vx) + ", " + std::to_string(vy) +
                           ") is outside the support ellipse") {}
};

struct GridTooSmall : std::runtime_error {
  GridTooSmall(int n, int t)
      : std::runtime_error("grid N = " + std::to_string(n) + " too small for t = " +
                           std::to_string(t) + ", need N >= 2t+3") {}
};

struct ZeroTime : std::runtime_error {
  ZeroTime() : std::runtime_error("pseudovelocity is undefined at t = 0") {}
};

struct PoleOnContour : std::runtime_error {
  explicit PoleOnContour(double r)
      : std::runtime_error("pole within 1e-8 of the unit circle at r = " +
                           std::to_string(r)) {}
};

struct NegativeMass : std::runtime_error {
  explicit NegativeMass(double d)
      : std::runtime_error("closed-form point mass " + std::to_string(d) +
                           " is below -1e-9") {}
};

// The coin parameter p in (0,1); q = 1-p is fixed at construction so every
// module sees the same pair.
struct CoinParams {
  double p;
  double q;
  explicit CoinParams(double p_) : p(p_), q(1.0 - p_) {
    if (!(p_ > 0.0 && p_ < 1.0))
      throw std::invalid_argument("coin parameter p = " + std::to_string(p_) +
                                  " must lie in (0,1)");
  }
};

// Initial internal state; construction rejects non-unit input instead of
// renormalizing, so a caller bug cannot silently change the point mass.
struct Qudit {
  std::array<complexd, 4> a;
  explicit Qudit(const std::array<complexd, 4>& raw) : a(raw) {
    double n = 0.0;
    for (const auto& z : a) n += std::norm(z);
    if (std::abs(n - 1.0) > 1e-9) throw NormError(n);
  }
  const complexd& operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
};

inline Qudit validate_qudit(const std::array<complexd, 4>& raw) { return Qudit(raw); }

// Wave number in the fundamental domain [-pi, pi)^2; inputs are wrapped by
// periodicity so expressions like (pi, pi) stay usable.
struct WaveNumber {
  double kx;
  double ky;
  WaveNumber(double kx_, double ky_) : kx(wrap(kx_)), ky(wrap(ky_)) {}
  static double wrap(double k) {
    double w = std::remainder(k, 2.0 * pi);  // (-pi, pi]
    return w == pi ? -pi : w;
  }
};

}  // namespace gwalk
