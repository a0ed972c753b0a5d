#pragma once

#include <string>
#include <vector>

#include "gwalk/types.hpp"

namespace gwalk {

// Named initial qudits:
//   grover-sym      (1,  1,  1,  1)/2
//   grover-antisym  (1,  1, -1, -1)/2
//   fig3            (1, -1,  1,  1)/2
//   fig4            (1,  1,  1, -1)/2
//   fig5            (1,  1,  0,  0)/sqrt(2)
//   fig6            (1, -1, -1,  1)/2
//   special         (sqrt(p/2), sqrt(p/2), -sqrt(q/2), -sqrt(q/2))  [p-dependent, Delta = 0]
Qudit preset_qudit(const std::string& name, const CoinParams& params);

const std::vector<std::string>& preset_names();

}  // namespace gwalk
