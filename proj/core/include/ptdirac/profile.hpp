#pragma once

#include "ptdirac/grid.hpp"
#include "ptdirac/models.hpp"

namespace ptdirac {

// Stationary solution u = a e^{i theta} e^{-i omega t}, v = -b e^{i phi} e^{-i omega t}.
struct SolitonProfile {
  UniformGrid grid;
  rvec a, b, theta, phi;
  double omega = 0.0;
  double gamma = 0.0;
  ModelTag model = ModelTag::Thirring;

  cvec u() const;
  cvec v() const;
  FieldState state(double time = 0.0) const;
};

}  // namespace ptdirac
