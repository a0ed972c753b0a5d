#pragma once

namespace gwalk::detail {

inline double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace gwalk::detail
