#include "ptdirac/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "ptdirac/error.hpp"

namespace ptdirac {

namespace {

double drift(const rvec& x) {
  if (x.empty()) return 0.0;
  const double x0 = x.front();
  double d = 0.0;
  for (double v : x) d = std::max(d, std::abs(v - x0));
  return x0 != 0.0 ? d / std::abs(x0) : d;
}

void record(const ModelParams& p, const FieldState& s, ConservationLedger& L) {
  const LedgerRequest req = L.has_energy_momentum ? LedgerRequest::Full : LedgerRequest::ChargeOnly;
  const ConservationSnapshot c = conservation_snapshot(p, s, req);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  L.times.push_back(s.time);
  L.q.push_back(c.q_total);
  L.H.push_back(L.has_energy_momentum ? c.H_total : nan);
  L.P.push_back(L.has_energy_momentum ? c.P_total : nan);
  L.samples.push_back(c);
}

// One step: node j receives u from j+1 and v from j-1.
void step(const ModelParams& p, const cvec& u, const cvec& v, double dt, cvec& un, cvec& vn) {
  const std::size_t n = u.size();
  const cplx I(0.0, 1.0);
  const double hdt = 0.5 * dt;
  for (std::size_t j = 0; j < n; ++j) {
    cplx au(0.0), bv(0.0);  // known halves of the trapezoid
    if (j + 1 < n) {
      const auto [su, sv] = coupling(p, u[j + 1], v[j + 1]);
      (void)sv;
      au = u[j + 1] + hdt * I * su;
    }
    if (j > 0) {
      const auto [su, sv] = coupling(p, u[j - 1], v[j - 1]);
      (void)su;
      bv = v[j - 1] + hdt * I * sv;
    }
    // Predictor: explicit Euler from the feet; the trapezoid doubles the foot half.
    cplx x = 2.0 * au - (j + 1 < n ? u[j + 1] : cplx(0.0));
    cplx y = 2.0 * bv - (j > 0 ? v[j - 1] : cplx(0.0));
    for (int it = 0; it < 30; ++it) {
      const auto [su, sv] = coupling(p, x, y);
      const cplx xn = au + hdt * I * su;
      const cplx yn = bv + hdt * I * sv;
      const double change = std::max(std::abs(xn - x), std::abs(yn - y));
      x = xn;
      y = yn;
      if (change <= 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
    }
    un[j] = x;
    vn[j] = y;
  }
}

}  // namespace

double ConservationLedger::drift_q() const { return drift(q); }
double ConservationLedger::drift_H() const { return has_energy_momentum ? drift(H) : 0.0; }
double ConservationLedger::drift_P() const { return has_energy_momentum ? drift(P) : 0.0; }

EvolutionResult evolve(const ModelParams& params, const FieldState& initial, double t_final,
                       double dx, const EvolveOptions& opts) {
  params.validate();
  initial.validate();
  require(dx > 0.0 && std::abs(dx - initial.grid.h) <= 1e-12 * dx, ErrorCode::MeshMismatch,
          "dx must equal the grid spacing of the initial state");
  const double dt = opts.dt == 0.0 ? dx : opts.dt;
  require(std::abs(dt - dx) <= 1e-12 * dx, ErrorCode::CFLViolation,
          "the characteristic scheme needs dt = dx");
  require(t_final >= 0.0 && std::isfinite(t_final), ErrorCode::ParamOutOfRange,
          "t_final must be a finite nonnegative time");

  const std::size_t nsteps = static_cast<std::size_t>(std::llround(t_final / dt));
  const std::size_t every =
      opts.ledger_every ? opts.ledger_every
                        : std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.1 / dt)));
  const std::size_t snap_every =
      opts.snapshot_every > 0.0
          ? std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(opts.snapshot_every / dt)))
          : 0;

  EvolutionResult r;
  r.ledger.has_energy_momentum = params.ledger_supported();
  r.ledger.charge_conserved = params.resolved() == ModelTag::Thirring || params.gamma == 0.0;
  FieldState cur = initial;
  FieldState nxt = initial;
  record(params, cur, r.ledger);
  if (snap_every) r.snapshots.push_back(cur);
  r.last_valid_time = cur.time;

  for (std::size_t k = 1; k <= nsteps; ++k) {
    step(params, cur.u, cur.v, dt, nxt.u, nxt.v);
    nxt.time = initial.time + static_cast<double>(k) * dt;
    const double sup = std::max(sup_norm(nxt.u), sup_norm(nxt.v));
    if (!(sup <= opts.blowup_level)) {
      r.blowup = true;
      break;
    }
    std::swap(cur, nxt);
    r.last_valid_time = cur.time;
    if (k % every == 0 || k == nsteps) record(params, cur, r.ledger);
    if (snap_every && (k % snap_every == 0)) r.snapshots.push_back(cur);
  }
  r.final = std::move(cur);
  return r;
}

FieldState perturb(const SolitonProfile& profile, double epsilon, PerturbMode mode,
                   std::uint64_t seed) {
  require(epsilon >= 0.0 && epsilon <= 0.1, ErrorCode::ParamOutOfRange,
          "perturbation amplitude must lie in [0, 0.1]");
  FieldState s = profile.state(0.0);
  if (mode == PerturbMode::Amplitude) {
    for (auto& z : s.u) z *= 1.0 + epsilon;
    for (auto& z : s.v) z *= 1.0 + epsilon;
    return s;
  }
  const double amp = epsilon * sup_norm(s.u);
  std::mt19937_64 gen(seed);
  // Explicit scaling of raw 53-bit draws keeps the stream identical across libraries.
  auto uniform = [&gen]() { return static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0; };
  for (auto* f : {&s.u, &s.v})
    for (auto& z : *f) {
      const double re = uniform();
      const double im = uniform();
      z += amp * cplx(re, im);
    }
  return s;
}

FieldState gauge_transform_thirring(const FieldState& state, double gamma, GaugeDirection dir) {
  state.validate();
  require(gamma >= 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "gamma must lie in [0, 1)");
  const std::size_t n = state.grid.n;
  require(n >= 5, ErrorCode::GridTooCoarse, "gauge transform needs at least 5 nodes");
  const double sup = std::max({sup_norm(state.u), sup_norm(state.v), 1.0});
  const double edge = std::max({std::abs(state.u.front()), std::abs(state.u.back()),
                                std::abs(state.v.front()), std::abs(state.v.back())});
  require(edge <= 1e-6 * sup, ErrorCode::NonDecayingField,
          "fields do not decay at the boundaries; the phase W is ill-defined");

  const double s = std::sqrt(1.0 - gamma * gamma);
  const double pu = std::pow(1.0 - gamma, 0.75) * std::pow(1.0 + gamma, 0.25);
  const double pv = std::pow(1.0 + gamma, 0.75) * std::pow(1.0 - gamma, 0.25);
  const bool to_parent = dir == GaugeDirection::ToParent;

  // Charge density of the PT fields, from whichever side is given.
  rvec dens(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double uu = to_parent ? std::norm(state.u[j]) : pu * pu * std::norm(state.u[j]);
    const double vv = to_parent ? std::norm(state.v[j]) : pv * pv * std::norm(state.v[j]);
    dens[j] = -((1.0 + gamma) * uu + (1.0 - gamma) * vv) / (2.0 * s * s);
  }
  const double hx = to_parent ? state.grid.h : state.grid.h / s;  // spacing in x
  const rvec W = cumulative_integral4(dens, hx);

  FieldState out;
  out.u.resize(n);
  out.v.resize(n);
  if (to_parent) {
    out.grid = {state.grid.x0 * s, state.grid.h * s, n};
    out.time = state.time * s;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx ph = std::polar(1.0, -gamma * W[j]);
      out.u[j] = ph * state.u[j] / pu;
      out.v[j] = ph * state.v[j] / pv;
    }
  } else {
    out.grid = {state.grid.x0 / s, state.grid.h / s, n};
    out.time = state.time / s;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx ph = std::polar(1.0, gamma * W[j]);
      out.u[j] = ph * state.u[j] * pu;
      out.v[j] = ph * state.v[j] * pv;
    }
  }
  return out;
}

FieldState mode_change(const FieldState& state, ModeDirection dir) {
  state.validate();
  const cplx I(0.0, 1.0);
  FieldState out = state;
  for (std::size_t j = 0; j < state.grid.n; ++j) {
    const cplx a = state.u[j], b = state.v[j];
    if (dir == ModeDirection::ToModes) {
      out.u[j] = 0.5 * (a - I * b);
      out.v[j] = 0.5 * (b - I * a);
    } else {
      out.u[j] = a + I * b;
      out.v[j] = b + I * a;
    }
  }
  return out;
}

}  // namespace ptdirac
