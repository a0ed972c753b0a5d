// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Each criterion also carries a wall-clock budget; blowing the budget fails it.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gwalk/gwalk.hpp"

using namespace gwalk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void require_close(double got, double want, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: |%.6g - %.6g| = %.3g > %.1g",
                  what.c_str(), got, want, std::abs(got - want), tol);
    require(std::abs(got - want) <= tol, buf);
  }
};

const std::array<const char*, 4> kFigPresets = {"fig3", "fig4", "fig5", "fig6"};

double antisym_delta_reference(double p, double sign) {
  const double q = 1.0 - p;
  const double s = std::sqrt(p * q);
  return (1.0 + sign * 2.0 * s) / pi *
         (std::asin(std::sqrt(p)) / p + std::asin(std::sqrt(q)) / q - 1.0 / s);
}

// ---- criteria --------------------------------------------------------------

void criterion1(Outcome& out) {
  const CoinParams half(0.5);
  const Qudit phi0 = preset_qudit("grover-sym", half);
  const double closed = localization_delta(half, phi0);
  out.require_close(closed, 2.0 * (pi - 2.0) / pi, 1e-12, "closed-form value");
  out.require_close(localization_delta_quadrature(half, phi0), closed, 2e-4,
                    "quadrature route");
}

void criterion2(Outcome& out) {
  const CoinParams half(0.5);
  out.require(localization_delta(half, preset_qudit("grover-antisym", half)) <= 1e-12,
              "point mass must vanish at p = 1/2");
  for (int i = 1; i <= 99; ++i) {
    const double p = i / 100.0;
    const CoinParams params(p);
    const double got = localization_delta(params, preset_qudit("grover-antisym", params));
    out.require_close(got, antisym_delta_reference(p, -1.0), 1e-12,
                      "curve at p = " + std::to_string(p));
    const double sym = localization_delta(params, preset_qudit("grover-sym", params));
    out.require_close(sym, antisym_delta_reference(p, +1.0), 1e-12,
                      "symmetric curve at p = " + std::to_string(p));
  }
}

void criterion3(Outcome& out) {
  for (int i = 1; i <= 19; ++i) {
    const double p = i / 20.0;
    const CoinParams params(p);
    const double d = localization_delta(params, preset_qudit("special", params));
    out.require(std::abs(d) <= 1e-12, "nonzero point mass at p = " + std::to_string(p));
  }
}

void criterion4(Outcome& out) {
  for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const CoinParams params(p);
    const double mass = ellipse_integrate(
        params, [&](double vx, double vy) { return mu_p(params, vx, vy); }, {});
    out.require_close(mass, 1.0, 2e-4, "density mass at p = " + std::to_string(p));

    const auto [kx, ky] = kxy_constants(params);
    const double kxq = ellipse_integrate(
        params, [&](double vx, double vy) { return vx * vx * mu_p(params, vx, vy); }, {});
    const double kyq = ellipse_integrate(
        params, [&](double vx, double vy) { return vy * vy * mu_p(params, vx, vy); }, {});
    out.require_close(kxq, kx, 2e-4, "K_x at p = " + std::to_string(p));
    out.require_close(kyq, ky, 2e-4, "K_y at p = " + std::to_string(p));
  }
}

void criterion5(Outcome& out) {
  for (double p : {0.25, 0.5}) {
    const CoinParams params(p);
    for (const char* preset : {"grover-sym", "fig3"}) {
      const Qudit phi0 = preset_qudit(preset, params);
      LatticeState real = init_state(phi0, params);
      for (int t : {1, 5, 30}) {
        while (real.t < t) real = step(real);
        const LatticeState spec = spectral_evolve(params, phi0, t, 2 * t + 4);
        double worst = 0.0;
        for (int x = -t; x <= t; ++x)
          for (int y = -t; y <= t; ++y)
            for (int c = 0; c < 4; ++c)
              worst = std::max(worst, std::abs(real.amplitude(x, y, c) -
                                               spec.amplitude(x, y, c)));
        char what[96];
        std::snprintf(what, sizeof what, "%s p=%g t=%d: amplitude gap %.3g",
                      preset, p, t, worst);
        out.require(worst <= 1e-10, what);
      }
    }
  }
}

void criterion6(Outcome& out) {
  const CoinParams params(0.25);
  const std::array<std::pair<int, int>, 5> orders = {
      {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}}};
  for (const char* preset : kFigPresets) {
    const Qudit phi0 = preset_qudit(preset, params);
    std::array<double, orders.size()> target{};
    for (std::size_t i = 0; i < orders.size(); ++i)
      target[i] = limit_moment(params, phi0, orders[i].first, orders[i].second);

    LatticeState state = init_state(phi0, params);
    std::array<double, orders.size()> err100{}, err400{};
    for (int checkpoint : {100, 400}) {
      while (state.t < checkpoint) state = step(state);
      for (std::size_t i = 0; i < orders.size(); ++i) {
        const auto [a, b] = orders[i];
        const double sim = joint_moment(state, a, b) /
                           std::pow(static_cast<double>(checkpoint), a + b);
        (checkpoint == 100 ? err100 : err400)[i] = std::abs(sim - target[i]);
      }
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
      char what[128];
      std::snprintf(what, sizeof what,
                    "%s order (%d,%d): err(100)=%.3g err(400)=%.3g", preset,
                    orders[i].first, orders[i].second, err100[i], err400[i]);
      // Shrinking error, except where both sit at the quadrature noise floor.
      out.require(err400[i] < err100[i] || err400[i] < 1e-8, what);
      out.require(err400[i] < 0.02, what);
    }
  }
}

void criterion7(Outcome& out) {
  const CoinParams params(0.25);
  const std::array<std::pair<int, int>, 6> orders = {
      {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
  for (const char* preset : kFigPresets) {
    const Qudit phi0 = preset_qudit(preset, params);
    const double delta = localization_delta(params, phi0);
    for (const auto& [a, b] : orders) {
      const double direct = limit_moment(params, phi0, a, b);
      double kroute = limit_moment_kspace(params, phi0, a, b);
      if (a == 0 && b == 0) kroute += delta;  // point mass carries no velocity
      char what[96];
      std::snprintf(what, sizeof what, "%s order (%d,%d)", preset, a, b);
      out.require_close(kroute, direct, 5e-4, what);
    }
  }
}

void criterion8(Outcome& out) {
  const CoinParams params(0.25);
  struct Expected {
    const char* preset;
    bool rx, ry, rb, bi;
  };
  const Expected table[] = {
      {"fig3", true, false, false, false},
      {"fig4", false, true, false, false},
      {"fig5", true, true, true, true},
      {"fig6", false, false, false, true},
  };
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const Expected& e : table) {
    const Qudit phi0 = preset_qudit(e.preset, params);
    const SymmetryClass sym = classify_symmetry(weight_coeffs(params, phi0));
    out.require(sym.reflect_x == e.rx && sym.reflect_y == e.ry &&
                    sym.reflect_both == e.rb && sym.birotational == e.bi,
                std::string(e.preset) + ": flag pattern");

    for (int i = 0; i < 100; ++i) {
      const double vx = unit(rng), vy = unit(rng);
      const double base = limit_density(params, phi0, vx, vy).first;
      if (e.rx)
        out.require(std::abs(limit_density(params, phi0, vx, -vy).first - base) <= 1e-12,
                    std::string(e.preset) + ": density not even in vy");
      if (e.ry)
        out.require(std::abs(limit_density(params, phi0, -vx, vy).first - base) <= 1e-12,
                    std::string(e.preset) + ": density not even in vx");
      if (e.bi)
        out.require(std::abs(limit_density(params, phi0, -vx, -vy).first - base) <= 1e-12,
                    std::string(e.preset) + ": density not invariant under rotation");
    }
  }
}

void criterion9(Outcome& out) {
  const double as[] = {0.3, 1.0 / std::sqrt(2.0), 0.9};
  for (double a : as) {
    const CheckPair chk = arcsine_integral_check(a);
    out.require_close(chk.numeric, chk.closed, 1e-8, "arcsine integral");
  }
  const GaussLegendre g = gauss_legendre(128);
  for (double a : as) {
    const KonnoDensityParams kp(a);
    double total = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double u = (g.x[i] + 1.0) * (pi / 4.0);
      const double x = a * std::sin(u);
      total += 2.0 * konno_density(x, kp) * a * std::cos(u) * g.w[i] * (pi / 4.0);
    }
    out.require_close(total, 1.0, 1e-8, "1d density normalization");
  }

  for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const CoinParams params(p);
    out.require_close(normalization_I_closed(params), pi * pi / 2.0, 1e-12,
                      "I = pi^2/2");
    const CheckPair id1 = identity1_check(params);
    out.require_close(id1.numeric, id1.closed, 1e-4, "half-line identity");
    const IxIyPair ixy = ix_iy_check(params);
    out.require(std::abs(ixy.ix.numeric - ixy.ix.closed) <= 1e-4 * ixy.ix.closed,
                "I_x at p = " + std::to_string(p));
    out.require(std::abs(ixy.iy.numeric - ixy.iy.closed) <= 1e-4 * ixy.iy.closed,
                "I_y at p = " + std::to_string(p));
    for (double r : {0.1, 0.5, 0.9}) {
      const ComplexCheckPair cj = contour_J_check(r, params);
      out.require(std::abs(cj.numeric - cj.closed) <= 1e-8 * std::abs(cj.closed),
                  "contour integral");
      const ComplexCheckPair cr = residue_check(r, params);
      out.require(std::abs(cr.numeric - cr.closed) <= 1e-8 * std::abs(cr.closed),
                  "residue");
    }
    for (const char* preset : {"grover-sym", "grover-antisym", "special"}) {
      const Qudit phi0 = preset_qudit(preset, params);
      out.require_close(localization_delta_quadrature(params, phi0),
                        localization_delta(params, phi0), 2e-4,
                        std::string(preset) + " point mass by quadrature");
    }
  }
}

void criterion10(Outcome& out) {
  const CoinParams params(0.3);
  LatticeState state = init_state(preset_qudit("fig3", params), params);
  for (int t = 1; t <= 200; ++t) {
    state = step(state);
    out.require(std::abs(total_probability(state) - 1.0) <= 1e-12,
                "conservation broke at t = " + std::to_string(t));
  }

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pdist(0.02, 0.98);
  std::uniform_real_distribution<double> kdist(-pi, pi);
  for (int i = 0; i < 1000; ++i) {
    const CoinParams rp(pdist(rng));
    const Eigen::Matrix4d a = coin_matrix(rp);
    out.require((a * a.transpose() - Eigen::Matrix4d::Identity())
                        .cwiseAbs().maxCoeff() <= 1e-12,
                "coin not orthogonal");
    const Eigen::Matrix4cd v = evolution_matrix(rp, WaveNumber(kdist(rng), kdist(rng)));
    out.require((v.adjoint() * v - Eigen::Matrix4cd::Identity())
                        .cwiseAbs().maxCoeff() <= 1e-12,
                "evolution not unitary");
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    double budget_s;
    void (*body)(Outcome&);
  };
  const Entry entries[] = {
      {1, "point mass for the symmetric Grover qudit at p = 1/2", 5, criterion1},
      {2, "point-mass curves for the symmetric and antisymmetric qudits", 5, criterion2},
      {3, "localization-free family has no point mass", 5, criterion3},
      {4, "density normalization and second-moment constants", 60, criterion4},
      {5, "real-space and wave-number evolutions agree", 60, criterion5},
      {6, "simulated moments converge to the limit moments", 600, criterion6},
      {7, "two independent routes to the limit moments agree", 300, criterion7},
      {8, "symmetry classification matches the density", 30, criterion8},
      {9, "closed-form identity checks", 120, criterion9},
      {10, "probability conservation and unitarity", 30, criterion10},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    e.body(out);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.budget_s && out.pass) {
      out.pass = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, "exceeded %.0f s budget", e.budget_s);
      out.detail = buf;
    }
    std::printf("[%s] criterion %d: %s (%.1f s)%s%s\n", out.pass ? "PASS" : "FAIL",
                e.id, e.label, secs, out.pass ? "" : " -- ",
                out.pass ? "" : out.detail.c_str());
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
