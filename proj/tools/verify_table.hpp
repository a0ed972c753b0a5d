#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace gwalk_cli {

struct CheckRow {
  std::string name;
  double error;      // absolute or relative, as the check defines
  double tolerance;
  bool passed() const { return error <= tolerance; }
};

inline void print_table(std::ostream& os, const std::vector<CheckRow>& rows) {
  std::size_t width = 4;
  for (const CheckRow& r : rows) width = std::max(width, r.name.size());
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-*s  %-12s %-12s %s\n",
                static_cast<int>(width), "check", "error", "tolerance", "result");
  os << buf;
  int passed = 0;
  for (const CheckRow& r : rows) {
    std::snprintf(buf, sizeof buf, "  %-*s  %-12.3e %-12.1e %s\n",
                  static_cast<int>(width), r.name.c_str(), r.error, r.tolerance,
                  r.passed() ? "pass" : "FAIL");
    os << buf;
    passed += r.passed() ? 1 : 0;
  }
  std::snprintf(buf, sizeof buf, "verification: %d/%zu checks passed\n",
                passed, rows.size());
  os << buf;
}

inline int table_exit_code(const std::vector<CheckRow>& rows) {
  for (const CheckRow& r : rows)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace gwalk_cli
