#pragma once

#include <string_view>
#include <utility>

#include "ptdirac/grid.hpp"

namespace ptdirac {

struct SolitonProfile;

enum class ModelTag { Thirring, GrossNeveu, NewModel, GeneralCubic };

std::string_view to_string(ModelTag tag);
ModelTag parse_model_tag(std::string_view name);

// i(u_t - u_x) + (1-gamma) v + (A u v* + B v u*) v = 0
// i(v_t + v_x) + (1+gamma) u + (A v u* + B u v*) u = 0
struct ModelParams {
  double A = 1.0;
  double B = 0.0;
  double gamma = 0.0;
  ModelTag tag = ModelTag::Thirring;

  static ModelParams thirring(double gamma);
  static ModelParams gross_neveu(double gamma);
  static ModelParams new_model(double gamma);
  static ModelParams general(double A, double B, double gamma);
  static ModelParams of(ModelTag tag, double gamma);

  void validate() const;
  // Named model with the same (A, B), or GeneralCubic.
  ModelTag resolved() const;
  // Whether energy and momentum laws are known for these parameters.
  bool ledger_supported() const;
};

enum class Perturbation { DriftJ1, ShiftJ2, MassA5 };

// Both roots (+, -) of the dispersion relation for plane waves e^{i(kx - omega t)}.
std::pair<cplx, cplx> dispersion_branches(Perturbation kind, double gamma, double k);

// Linear plus cubic coupling terms S_u, S_v of the component equations.
std::pair<cplx, cplx> coupling(const ModelParams& p, cplx u, cplx v);

// (i u_xi, i v_eta) = (-S_u, -S_v).
std::pair<cplx, cplx> rhs(const ModelParams& p, cplx u, cplx v);

// u_t and v_t from the field equations with fourth-order x-derivatives.
void time_derivatives(const ModelParams& p, const FieldState& s, cvec& ut, cvec& vt);

struct ResidualNorms {
  double u = 0.0;
  double v = 0.0;
  double max() const { return u > v ? u : v; }
};

// Sup-norm residual of the stationary equations
//   omega U - i U' + S_u = 0,  omega V + i V' + S_v = 0
// at interior nodes, four boundary nodes excluded on each side.
ResidualNorms stationary_residual(const ModelParams& p, const UniformGrid& grid, const cvec& U,
                                  const cvec& V, double omega);
ResidualNorms stationary_residual(const ModelParams& p, const SolitonProfile& profile);

struct Densities {
  rvec q, j;       // charge
  rvec H, J;       // energy
  rvec P, Phi;     // momentum
};

enum class LedgerRequest { ChargeOnly, Full };

// Pointwise densities and fluxes. u_x from fourth-order differences, u_t from
// the field equations. Energy and momentum entries are left empty for
// ChargeOnly requests.
Densities densities(const ModelParams& p, const FieldState& s,
                    LedgerRequest req = LedgerRequest::Full);

struct ConservationSnapshot {
  double q_total = 0.0;
  double H_total = 0.0;
  double P_total = 0.0;
  double j_left = 0.0, j_right = 0.0;
  double J_left = 0.0, J_right = 0.0;
  double Phi_left = 0.0, Phi_right = 0.0;
  bool charge_conserved = true;
  bool has_energy_momentum = true;
};

// Trapezoid totals and boundary fluxes. Throws UnsupportedLedger when energy
// and momentum are requested for a model without known laws.
ConservationSnapshot conservation_snapshot(const ModelParams& p, const FieldState& s,
                                           LedgerRequest req = LedgerRequest::Full);

}  // namespace ptdirac
