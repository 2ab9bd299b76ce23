#pragma once

#include <cstddef>

#include "ptdirac/numerics.hpp"

namespace ptdirac {

// Uniform grid x_j = x0 + j*h, j = 0..n-1.
struct UniformGrid {
  double x0 = 0.0;
  double h = 1.0;
  std::size_t n = 0;

  double operator[](std::size_t j) const { return x0 + h * static_cast<double>(j); }
  double back() const { return (*this)[n - 1]; }
  rvec nodes() const;

  // n nodes covering [-L, L].
  static UniformGrid symmetric(double L, std::size_t n);
  // Nodes -L, -L + h, ..., L; L is rounded to a whole number of steps.
  static UniformGrid with_spacing(double L, double h);
  // Checks that x is strictly increasing and uniform to round-off.
  static UniformGrid from_nodes(const rvec& x);
};

struct FieldState {
  UniformGrid grid;
  cvec u;
  cvec v;
  double time = 0.0;

  void validate() const;
};

}  // namespace ptdirac
