#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwalk/gwalk.hpp"
#include "verify_table.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace gwalk;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr std::array<std::pair<int, int>, 6> kOrders = {
    {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};

const char* order_key(int alpha, int beta) {
  if (alpha == 0 && beta == 0) return "m00";
  if (alpha == 1 && beta == 0) return "m10";
  if (alpha == 0 && beta == 1) return "m01";
  if (alpha == 2 && beta == 0) return "m20";
  if (alpha == 1 && beta == 1) return "m11";
  return "m02";
}

std::array<complexd, 4> parse_qudit_components(const std::string& text) {
  std::array<complexd, 4> raw;
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') { parts.push_back(cur); cur.clear(); }
    else cur.push_back(ch);
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw ConfigError("--qudit: expected 4 comma-separated components, got " +
                      std::to_string(parts.size()));
  for (int i = 0; i < 4; ++i) {
    const std::string& s = parts[static_cast<std::size_t>(i)];
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw ConfigError("--qudit: component '" + s + "' is not of the form re:im");
    try {
      std::size_t used = 0;
      const double re = std::stod(s.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(s);
      const std::string imtext = s.substr(colon + 1);
      const double im = std::stod(imtext, &used);
      if (used != imtext.size()) throw std::invalid_argument(s);
      raw[static_cast<std::size_t>(i)] = complexd(re, im);
    } catch (const std::exception&) {
      throw ConfigError("--qudit: cannot parse component '" + s + "' as re:im");
    }
  }
  return raw;
}

// ----- JSON config plumbing: flags override file values -------------------

ordered_json load_config(const std::string& path,
                         const std::set<std::string>& allowed) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config: cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("--config: " + std::string(e.what()));
  }
  if (!j.is_object()) throw ConfigError("--config: top level must be an object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw ConfigError("--config: unknown field \"" + item.key() + "\"");
  return j;
}

double json_number(const ordered_json& j, const std::string& key) {
  if (!j.at(key).is_number())
    throw ConfigError("--config: field \"" + key + "\" must be a number");
  return j.at(key).get<double>();
}

int json_int(const ordered_json& j, const std::string& key) {
  if (!j.at(key).is_number_integer())
    throw ConfigError("--config: field \"" + key + "\" must be an integer");
  return j.at(key).get<int>();
}

std::string json_string(const ordered_json& j, const std::string& key) {
  if (!j.at(key).is_string())
    throw ConfigError("--config: field \"" + key + "\" must be a string");
  return j.at(key).get<std::string>();
}

// One resolved value per option: CLI flag when given, else config, else default.
struct OptionPicker {
  const CLI::App* cmd;
  ordered_json cfg;

  bool flag_given(const std::string& flag) const { return cmd->count(flag) > 0; }

  double number(const std::string& flag, const std::string& key, double flagval,
                std::optional<double> fallback) const {
    if (flag_given(flag)) return flagval;
    if (cfg.contains(key)) return json_number(cfg, key);
    if (fallback) return *fallback;
    throw ConfigError(flag + " is required (flag or config field \"" + key + "\")");
  }

  int integer(const std::string& flag, const std::string& key, int flagval,
              std::optional<int> fallback) const {
    if (flag_given(flag)) return flagval;
    if (cfg.contains(key)) return json_int(cfg, key);
    if (fallback) return *fallback;
    throw ConfigError(flag + " is required (flag or config field \"" + key + "\")");
  }

  std::string text(const std::string& flag, const std::string& key,
                   const std::string& flagval, std::optional<std::string> fallback) const {
    if (flag_given(flag)) return flagval;
    if (cfg.contains(key)) return json_string(cfg, key);
    if (fallback) return *fallback;
    throw ConfigError(flag + " is required (flag or config field \"" + key + "\")");
  }

  std::vector<int> int_list(const std::string& flag, const std::string& key,
                            const std::vector<int>& flagval) const {
    if (flag_given(flag)) return flagval;
    if (cfg.contains(key)) {
      const ordered_json& node = cfg.at(key);
      if (node.is_number_integer()) return {node.get<int>()};
      if (node.is_array()) {
        std::vector<int> out;
        for (const auto& e : node) {
          if (!e.is_number_integer())
            throw ConfigError("--config: field \"" + key + "\" must hold integers");
          out.push_back(e.get<int>());
        }
        return out;
      }
      throw ConfigError("--config: field \"" + key + "\" must be an integer or array");
    }
    return {};
  }
};

// The preset may depend on p ("special"), so qudit resolution returns either
// a fixed qudit or a preset name to be instantiated per parameter value.
struct QuditChoice {
  std::optional<std::array<complexd, 4>> fixed;
  std::optional<std::string> preset;

  Qudit at(const CoinParams& params) const {
    if (fixed) return Qudit(*fixed);
    return preset_qudit(*preset, params);
  }
};

QuditChoice resolve_qudit(const OptionPicker& opt, const std::string& qudit_flag,
                          const std::string& preset_flag) {
  QuditChoice choice;
  if (opt.flag_given("--qudit")) {
    choice.fixed = parse_qudit_components(qudit_flag);
    return choice;
  }
  if (opt.flag_given("--qudit-preset")) {
    choice.preset = preset_flag;
    return choice;
  }
  const bool has_q = opt.cfg.contains("qudit");
  const bool has_p = opt.cfg.contains("qudit_preset");
  if (has_q && has_p)
    throw ConfigError("--config: sets both \"qudit\" and \"qudit_preset\"");
  if (has_q) {
    choice.fixed = parse_qudit_components(json_string(opt.cfg, "qudit"));
    return choice;
  }
  if (has_p) {
    choice.preset = json_string(opt.cfg, "qudit_preset");
    return choice;
  }
  throw ConfigError("--qudit or --qudit-preset is required (flag or config)");
}

void check_preset_name(const QuditChoice& choice) {
  if (!choice.preset) return;
  const auto& names = preset_names();
  if (std::find(names.begin(), names.end(), *choice.preset) == names.end())
    throw ConfigError("--qudit-preset: unknown preset '" + *choice.preset + "'");
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path full = dir / name;
  std::ofstream out(full);
  if (!out) throw ConfigError("--out: cannot write " + full.string());
  return out;
}

ordered_json qudit_json(const Qudit& phi0) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < 4; ++i)
    arr.push_back({phi0[i].real(), phi0[i].imag()});
  return arr;
}

// ----- subcommands ---------------------------------------------------------

int run_simulate(const CoinParams& params, const Qudit& phi0, std::vector<int> ts,
                 double cell, const fs::path& out_dir) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.empty()) throw ConfigError("--t is required (flag or config field \"t\")");
  if (ts.front() < 1) throw ConfigError("--t: every time must be >= 1");
  if (!(cell > 0.0)) throw ConfigError("--cell must be positive");

  ordered_json moments_entries = ordered_json::array();
  LatticeState state = init_state(phi0, params);
  for (int t : ts) {
    while (state.t < t) state = step(state);
    ordered_json entry;
    entry["t"] = t;
    for (const auto& [a, b] : kOrders)
      entry[order_key(a, b)] =
          joint_moment(state, a, b) / std::pow(static_cast<double>(t), a + b);
    moments_entries.push_back(std::move(entry));
  }

  // dist.csv and pseudovel.csv describe the last requested time.
  {
    std::ofstream out = open_out(out_dir, "dist.csv");
    out << "x,y,prob\n";
    const ProbField prob = probability_map(state);
    for (int x = -prob.radius; x <= prob.radius; ++x)
      for (int y = -prob.radius; y <= prob.radius; ++y) {
        const double value = prob.at(x, y);
        if (value > 0.0)
          out << x << ',' << y << ',' << fmt17(value) << '\n';
      }
  }
  {
    std::ofstream out = open_out(out_dir, "pseudovel.csv");
    out << "vx_center,vy_center,mass\n";
    for (const HistogramBin& bin : pseudovelocity_histogram(state, cell))
      out << fmt17(bin.vx) << ',' << fmt17(bin.vy) << ',' << fmt17(bin.mass) << '\n';
  }
  {
    ordered_json doc;
    doc["p"] = params.p;
    doc["qudit"] = qudit_json(phi0);
    doc["moments"] = std::move(moments_entries);
    std::ofstream out = open_out(out_dir, "moments.json");
    out << doc.dump(2) << '\n';
  }
  return 0;
}

int run_limit(const CoinParams& params, const Qudit& phi0, int grid,
              const fs::path& out_dir) {
  if (grid < 32) throw ConfigError("--grid must be >= 32");

  const WeightCoefficients coeffs = weight_coeffs(params, phi0);
  const double delta = localization_delta(params, phi0);
  const SymmetryClass sym = classify_symmetry(coeffs);

  {
    std::ofstream out = open_out(out_dir, "nu.csv");
    out << "vx,vy,density\n";
    for (int i = 0; i < grid; ++i) {
      const double vx = -1.0 + 2.0 * i / (grid - 1);
      for (int j = 0; j < grid; ++j) {
        const double vy = -1.0 + 2.0 * j / (grid - 1);
        const double density = mu_p(params, vx, vy) * weight_poly(coeffs, vx, vy);
        out << fmt17(vx) << ',' << fmt17(vy) << ',' << fmt17(density) << '\n';
      }
    }
  }

  ordered_json doc;
  doc["p"] = params.p;
  doc["qudit"] = qudit_json(phi0);
  doc["M1"] = coeffs.m1;
  doc["M2"] = coeffs.m2;
  doc["M3"] = coeffs.m3;
  doc["M4"] = coeffs.m4;
  doc["M5"] = coeffs.m5;
  doc["M6"] = coeffs.m6;
  doc["delta"] = delta;
  doc["symmetry_flags"] = {{"reflect_x", sym.reflect_x},
                           {"reflect_y", sym.reflect_y},
                           {"reflect_both", sym.reflect_both},
                           {"birotational", sym.birotational}};
  ordered_json moments;
  double mass_check = 0.0;
  for (const auto& [a, b] : kOrders) {
    const double value = limit_moment(params, phi0, a, b);
    moments[order_key(a, b)] = value;
    if (a == 0 && b == 0) mass_check = value;  // AC integral plus point mass
  }
  doc["moments"] = std::move(moments);
  doc["mass_check"] = mass_check;

  std::ofstream out = open_out(out_dir, "summary.json");
  out << doc.dump(2) << '\n';
  return 0;
}

int run_compare(const CoinParams& params, const Qudit& phi0,
                const std::vector<int>& ts, const fs::path& out_dir) {
  if (ts.empty())
    throw ConfigError("--t is required (flag or config field \"t_list\")");
  if (ts.front() < 1) throw ConfigError("--t: every time must be >= 1");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ts[i] <= ts[i - 1])
      throw ConfigError("--t: time list must be strictly ascending");

  std::array<double, kOrders.size()> limits{};
  for (std::size_t i = 0; i < kOrders.size(); ++i)
    limits[i] = limit_moment(params, phi0, kOrders[i].first, kOrders[i].second);

  std::ofstream out = open_out(out_dir, "compare.csv");
  out << "t,alpha,beta,simulated,limit,abs_error\n";
  LatticeState state = init_state(phi0, params);
  for (int t : ts) {
    while (state.t < t) state = step(state);
    for (std::size_t i = 0; i < kOrders.size(); ++i) {
      const auto [a, b] = kOrders[i];
      const double sim =
          joint_moment(state, a, b) / std::pow(static_cast<double>(t), a + b);
      out << t << ',' << a << ',' << b << ',' << fmt17(sim) << ','
          << fmt17(limits[i]) << ',' << fmt17(std::abs(sim - limits[i])) << '\n';
    }
  }
  return 0;
}

int run_delta_scan(double p_min, double p_max, int steps, const QuditChoice& choice,
                   const fs::path& out_dir) {
  if (!(p_min > 0.0 && p_min < p_max && p_max < 1.0))
    throw ConfigError("--p-min/--p-max must satisfy 0 < p-min < p-max < 1");
  if (steps < 2) throw ConfigError("--steps must be >= 2");

  std::ofstream out = open_out(out_dir, "delta.csv");
  out << "p,delta\n";
  for (int i = 0; i < steps; ++i) {
    const double p =
        (i == steps - 1) ? p_max : p_min + (p_max - p_min) * i / (steps - 1);
    const CoinParams params(p);
    const double delta = localization_delta(params, choice.at(params));
    out << fmt17(p) << ',' << fmt17(delta) << '\n';
  }
  return 0;
}

int run_verify(std::ostream& os) {
  std::vector<gwalk_cli::CheckRow> rows;
  char name[96];
  const double ps[] = {0.1, 0.25, 0.5, 0.75, 0.9};
  const double rs[] = {0.1, 0.5, 0.9};
  const double as[] = {0.3, 1.0 / std::sqrt(2.0), 0.9};

  auto rel = [](const complexd& got, const complexd& want) {
    return std::abs(got - want) / std::abs(want);
  };

  for (double a : as) {
    const CheckPair c = arcsine_integral_check(a);
    std::snprintf(name, sizeof name, "arcsine integral a=%.4g", a);
    rows.push_back({name, std::abs(c.numeric - c.closed), 1e-8});
  }

  // Konno density normalization through x = a sin(u).
  for (double a : as) {
    const KonnoDensityParams kp(a);
    const GaussLegendre g = gauss_legendre(128);
    double integral = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double u = (g.x[i] + 1.0) * (pi / 4.0);
      const double x = a * std::sin(u);
      integral += 2.0 * konno_density(x, kp) * a * std::cos(u) * g.w[i] * (pi / 4.0);
    }
    std::snprintf(name, sizeof name, "konno normalization a=%.4g", a);
    rows.push_back({name, std::abs(integral - 1.0), 1e-8});
  }

  for (double p : ps) {
    const CoinParams params(p);

    std::snprintf(name, sizeof name, "I = pi^2/2 p=%.2g", p);
    rows.push_back({name, std::abs(normalization_I_closed(params) - pi * pi / 2.0), 1e-12});

    const CheckPair id1 = identity1_check(params);
    std::snprintf(name, sizeof name, "identity1 p=%.2g", p);
    rows.push_back({name, std::abs(id1.numeric - id1.closed), 1e-4});

    const IxIyPair ixy = ix_iy_check(params);
    std::snprintf(name, sizeof name, "I_x p=%.2g", p);
    rows.push_back({name, std::abs(ixy.ix.numeric - ixy.ix.closed) / ixy.ix.closed, 1e-4});
    std::snprintf(name, sizeof name, "I_y p=%.2g", p);
    rows.push_back({name, std::abs(ixy.iy.numeric - ixy.iy.closed) / ixy.iy.closed, 1e-4});

    for (double r : rs) {
      const ComplexCheckPair cj = contour_J_check(r, params);
      std::snprintf(name, sizeof name, "contour J r=%.2g p=%.2g", r, p);
      rows.push_back({name, rel(cj.numeric, cj.closed), 1e-8});

      const ComplexCheckPair cr = residue_check(r, params);
      std::snprintf(name, sizeof name, "residue r=%.2g p=%.2g", r, p);
      rows.push_back({name, rel(cr.numeric, cr.closed), 1e-8});
    }

    for (const char* preset : {"grover-sym", "grover-antisym", "special"}) {
      const Qudit phi0 = preset_qudit(preset, params);
      const double closed = localization_delta(params, phi0);
      const double quad = localization_delta_quadrature(params, phi0);
      std::snprintf(name, sizeof name, "delta quadrature p=%.2g %s", p, preset);
      rows.push_back({name, std::abs(closed - quad), 2e-4});
    }
  }

  gwalk_cli::print_table(os, rows);
  return gwalk_cli::table_exit_code(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Grover walks on the square lattice: exact simulation,"
               " limit distributions, and cross checks"};
  app.set_version_flag("--version", "gwalk 1.0.0");
  app.require_subcommand(1);

  struct CommonFlags {
    double p = 0.0;
    std::string qudit;
    std::string preset;
    std::string config;
    std::string out = ".";
  };

  auto add_common = [](CLI::App* cmd, CommonFlags& f, bool with_p) {
    if (with_p) cmd->add_option("--p", f.p, "coin parameter in (0,1)");
    auto* q = cmd->add_option("--qudit", f.qudit,
                              "initial qudit as re:im,re:im,re:im,re:im");
    auto* qp = cmd->add_option("--qudit-preset", f.preset,
                               "one of: grover-sym, grover-antisym, fig3, fig4,"
                               " fig5, fig6, special");
    q->excludes(qp);
    qp->excludes(q);
    cmd->add_option("--config", f.config, "JSON config file; flags take precedence");
    cmd->add_option("--out", f.out, "output directory (default .)");
  };

  CommonFlags sim_f, lim_f, cmp_f, scan_f;
  std::vector<int> sim_t, cmp_t;
  double sim_cell = 0.05;
  int lim_grid = 201;
  double scan_pmin = 0.0, scan_pmax = 0.0;
  int scan_steps = 0;

  CLI::App* sim = app.add_subcommand(
      "simulate", "evolve the walk; writes dist.csv, moments.json, pseudovel.csv");
  add_common(sim, sim_f, true);
  sim->add_option("--t", sim_t, "time step(s); snapshot files use the last one");
  sim->add_option("--cell", sim_cell, "pseudovelocity histogram cell size (default 0.05)");

  CLI::App* lim = app.add_subcommand(
      "limit", "evaluate the limit distribution; writes nu.csv, summary.json");
  add_common(lim, lim_f, true);
  lim->add_option("--grid", lim_grid, "mesh points per axis over [-1,1] (default 201)");

  CLI::App* cmp = app.add_subcommand(
      "compare", "simulated vs limit moments; writes compare.csv");
  add_common(cmp, cmp_f, true);
  cmp->add_option("--t", cmp_t, "ascending time steps to compare at");

  CLI::App* scan = app.add_subcommand(
      "delta-scan", "point mass across a p range; writes delta.csv");
  add_common(scan, scan_f, false);
  scan->add_option("--p-min", scan_pmin, "lower end of the p grid");
  scan->add_option("--p-max", scan_pmax, "upper end of the p grid");
  scan->add_option("--steps", scan_steps, "number of grid points (>= 2)");

  CLI::App* ver = app.add_subcommand(
      "verify", "run every closed-form identity check; exit 1 on any failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ver->parsed()) return run_verify(std::cout);

    if (sim->parsed()) {
      OptionPicker opt{sim, sim_f.config.empty()
                                ? ordered_json::object()
                                : load_config(sim_f.config,
                                              {"p", "qudit", "qudit_preset", "t",
                                               "cell", "out"})};
      const CoinParams params(opt.number("--p", "p", sim_f.p, std::nullopt));
      QuditChoice choice = resolve_qudit(opt, sim_f.qudit, sim_f.preset);
      check_preset_name(choice);
      const double cell = opt.number("--cell", "cell", sim_cell, 0.05);
      const fs::path out_dir = opt.text("--out", "out", sim_f.out, std::string("."));
      return run_simulate(params, choice.at(params), opt.int_list("--t", "t", sim_t),
                          cell, out_dir);
    }

    if (lim->parsed()) {
      OptionPicker opt{lim, lim_f.config.empty()
                                ? ordered_json::object()
                                : load_config(lim_f.config,
                                              {"p", "qudit", "qudit_preset", "grid",
                                               "out"})};
      const CoinParams params(opt.number("--p", "p", lim_f.p, std::nullopt));
      QuditChoice choice = resolve_qudit(opt, lim_f.qudit, lim_f.preset);
      check_preset_name(choice);
      const int grid = opt.integer("--grid", "grid", lim_grid, 201);
      const fs::path out_dir = opt.text("--out", "out", lim_f.out, std::string("."));
      return run_limit(params, choice.at(params), grid, out_dir);
    }

    if (cmp->parsed()) {
      OptionPicker opt{cmp, cmp_f.config.empty()
                                ? ordered_json::object()
                                : load_config(cmp_f.config,
                                              {"p", "qudit", "qudit_preset", "t_list",
                                               "out"})};
      const CoinParams params(opt.number("--p", "p", cmp_f.p, std::nullopt));
      QuditChoice choice = resolve_qudit(opt, cmp_f.qudit, cmp_f.preset);
      check_preset_name(choice);
      const fs::path out_dir = opt.text("--out", "out", cmp_f.out, std::string("."));
      return run_compare(params, choice.at(params),
                         opt.int_list("--t", "t_list", cmp_t), out_dir);
    }

    if (scan->parsed()) {
      OptionPicker opt{scan, scan_f.config.empty()
                                ? ordered_json::object()
                                : load_config(scan_f.config,
                                              {"p_min", "p_max", "steps", "qudit",
                                               "qudit_preset", "out"})};
      const double p_min = opt.number("--p-min", "p_min", scan_pmin, std::nullopt);
      const double p_max = opt.number("--p-max", "p_max", scan_pmax, std::nullopt);
      const int steps = opt.integer("--steps", "steps", scan_steps, std::nullopt);
      QuditChoice choice = resolve_qudit(opt, scan_f.qudit, scan_f.preset);
      check_preset_name(choice);
      const fs::path out_dir = opt.text("--out", "out", scan_f.out, std::string("."));
      return run_delta_scan(p_min, p_max, steps, choice, out_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
