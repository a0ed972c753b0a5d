#include "gwalk/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace gwalk {

Qudit preset_qudit(const std::string& name, const CoinParams& params) {
  const double h = 0.5;
  const double r2 = 1.0 / std::sqrt(2.0);
  if (name == "grover-sym") return Qudit{{h, h, h, h}};
  if (name == "grover-antisym") return Qudit{{h, h, -h, -h}};
  if (name == "fig3") return Qudit{{h, -h, h, h}};
  if (name == "fig4") return Qudit{{h, h, h, -h}};
  if (name == "fig5") return Qudit{{r2, r2, 0.0, 0.0}};
  if (name == "fig6") return Qudit{{h, -h, -h, h}};
  if (name == "special") {
    const double a = std::sqrt(params.p / 2.0);
    const double b = std::sqrt(params.q / 2.0);
    return Qudit{{a, a, -b, -b}};
  }
  throw std::invalid_argument("unknown qudit preset: " + name);
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "grover-sym", "grover-antisym", "fig3", "fig4", "fig5", "fig6", "special"};
  return names;
}

}  // namespace gwalk
