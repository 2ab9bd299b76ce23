#pragma once

#include "ptdirac/profile.hpp"

namespace ptdirac {

enum class Branch { HighFreq, LowFreq };

const char* to_string(Branch b);

struct BranchConstants {
  double rho;   // sqrt(|2 omega^2 - 1|)
  double chi0;  // value of chi at |x| -> infinity
};

// HighFreq: cosh chi0 = sqrt(2) omega / rho, sinh chi0 = 1 / rho.
// LowFreq:  sinh chi0 = sqrt(2) omega / rho, cosh chi0 = 1 / rho.
BranchConstants branch_constants(double omega, Branch branch);
double fixed_point_chi0(double omega, Branch branch);

// Fictitious-particle potential, zero of U at chi0.
double potential_U(double chi, double omega, double gamma, Branch branch);
// dU/dchi.
double potential_dU(double chi, double omega, double gamma, Branch branch);

// Simple zero of U nearest to chi0 from the left.
double turning_point_chi1(double omega, double gamma, Branch branch);

struct StokesTrajectory {
  rvec x;
  rvec chi;
  rvec delta;  // chi0 - chi, kept separately for accuracy near the tails
  rvec X, Y, Z, R;
  rvec param;  // orbit parameter of each node, negative past the tail junction
  Branch branch = Branch::HighFreq;
  double omega = 0.0;
  double gamma = 0.0;
  double rho = 0.0;
  double chi0 = 0.0;
  double chi1 = 0.0;
  double x_tail = 0.0;  // beyond |x| > x_tail chi follows the linearized asymptote
  double mu = 0.0;      // decay rate of chi0 - chi
};

// chi(x) from |x| = int_{chi1}^{chi} dchi / sqrt(-2U) and the Stokes components
// along the orbit. x may be any set of nodes.
StokesTrajectory chi_profile(double omega, double gamma, Branch branch, const rvec& x);

// Rate d(beta)/dx as a function of delta = chi0 - chi, written in the
// cancellation-free branch form.
double beta_rate(double delta, double omega, double gamma, Branch branch);
// Rate d(beta)/dx from the Stokes components directly.
double beta_rate_stokes(double X, double Z, double R, double gamma);

// Amplitudes and phases from a trajectory sampled on a uniform grid.
SolitonProfile reconstruct_profile(const StokesTrajectory& traj);

// PT new-model soliton for (omega, gamma) inside the existence domain; the
// branch is chosen from the sign of 2 omega^2 - 1.
SolitonProfile new_model_pt_soliton(double omega, double gamma, const UniformGrid& grid);

// R along the homoclinic orbit on the second hyperbola branch
// R = 2 omega + sqrt(2) rho cosh chi, omega < -1/sqrt(2).
rvec negative_frequency_R(double omega, double gamma, const rvec& x);

}  // namespace ptdirac
