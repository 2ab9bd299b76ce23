#pragma once

#include <algorithm>
#include <cmath>

#include "ptdirac/numerics.hpp"

namespace ptdirac::test {

inline double max_abs_diff(const rvec& a, const rvec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Largest |f(x_j) - s f(x_{n-1-j})| over a symmetric grid (s = +1 even, -1 odd).
inline double parity_defect(const rvec& f, double s) {
  double d = 0.0;
  const std::size_t n = f.size();
  for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(f[j] - s * f[n - 1 - j]));
  return d;
}

}  // namespace ptdirac::test
