#pragma once

#include <cstdint>
#include <vector>

#include "ptdirac/models.hpp"
#include "ptdirac/profile.hpp"

namespace ptdirac {

struct ConservationLedger {
  rvec times;
  rvec q, H, P;  // H and P are NaN when the model has no energy/momentum laws
  std::vector<ConservationSnapshot> samples;
  bool has_energy_momentum = false;
  bool charge_conserved = false;

  // max_t |X(t) - X(0)| / |X(0)|; the absolute deviation when X(0) = 0.
  double drift_q() const;
  double drift_H() const;
  double drift_P() const;
};

struct EvolveOptions {
  double dt = 0.0;               // 0 selects dt = dx; anything else must equal dx
  std::size_t ledger_every = 0;  // steps between ledger samples; 0 = round(0.1/dt)
  double snapshot_every = 0.0;   // time between stored snapshots; 0 disables
  double blowup_level = 1e6;
};

struct EvolutionResult {
  FieldState final;
  ConservationLedger ledger;
  std::vector<FieldState> snapshots;
  bool blowup = false;
  double last_valid_time = 0.0;
};

// Method of characteristics with dt = dx: u is carried along x + t = const,
// v along x - t = const, and the coupling terms are integrated with the
// trapezoidal rule (Euler predictor, corrector iterated to convergence).
// Incoming boundary values are zero.
EvolutionResult evolve(const ModelParams& params, const FieldState& initial, double t_final,
                       double dx, const EvolveOptions& opts = {});

enum class PerturbMode { Amplitude, Noise };

// Amplitude: (u, v) -> (1 + eps)(u, v). Noise: adds independent uniform
// complex noise of amplitude eps * sup|u| to every node, seeded.
FieldState perturb(const SolitonProfile& profile, double epsilon, PerturbMode mode,
                   std::uint64_t seed = 0);

enum class GaugeDirection { ToParent, FromParent };

// Maps the PT-symmetric Thirring model to the parent Thirring model
//   i(U_T - U_X) + V + |V|^2 U = 0,  i(V_T + V_X) + U + |U|^2 V = 0
// by X = s x, T = s t with s = sqrt(1 - gamma^2), and
//   u = (1-gamma)^{3/4} (1+gamma)^{1/4} e^{i gamma W} U,
//   v = (1+gamma)^{3/4} (1-gamma)^{1/4} e^{i gamma W} V,
//   W_x = -[(1+gamma)|u|^2 + (1-gamma)|v|^2] / (2 s^2),  W(x_0) = 0.
FieldState gauge_transform_thirring(const FieldState& state, double gamma, GaugeDirection dir);

enum class ModeDirection { ToModes, FromModes };

// u1 = (u - i v)/2, u2 = (v - i u)/2 and the inverse u = u1 + i u2, v = u2 + i u1.
// The mode fields are returned in the u and v slots.
FieldState mode_change(const FieldState& state, ModeDirection dir);

}  // namespace ptdirac
