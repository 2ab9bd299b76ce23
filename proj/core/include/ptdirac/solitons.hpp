#pragma once

#include "ptdirac/profile.hpp"

namespace ptdirac {

// PT-symmetric Thirring soliton, native parameter alpha in (0, pi/2):
// omega = sqrt(1-gamma^2) cos(2 alpha), kappa = sqrt(1 - omega^2 - gamma^2).
SolitonProfile thirring_soliton(double gamma, double alpha, const UniformGrid& grid);

// alpha in (0, pi/2) giving frequency omega, |omega| < sqrt(1-gamma^2).
double thirring_alpha(double gamma, double omega);

struct ThirringParameters {
  double omega;
  double kappa;
};
ThirringParameters thirring_parameters(double gamma, double alpha);

// PT-symmetric Gross-Neveu soliton, 0 < omega < sqrt(1-gamma^2).
SolitonProfile gross_neveu_soliton(double gamma, double omega, const UniformGrid& grid);

// sigma(x) = -2 kappa^2 / (1 + rho cosh(2 kappa x)) = -2ab cos(phi - theta).
double gross_neveu_sigma(double gamma, double omega, double x);

enum class PhaseBranch { Antikink, Kink };

// Explicit gamma = 0 new-model soliton, 1/sqrt(2) < omega < 1, with
// theta = -arctan(lambda tanh(kappa x)), phi = -theta. The growing (kink)
// phase branch gives a^2 < 0 and is rejected.
SolitonProfile new_model_soliton_explicit(double omega, const UniformGrid& grid,
                                          PhaseBranch branch = PhaseBranch::Antikink);

struct HumpInfo {
  bool bimodal = false;
  double x_m = 0.0;  // hump position for bimodal profiles
};

HumpInfo hump_locations(double omega);

}  // namespace ptdirac
