#include "ptdirac/models.hpp"

#include <cmath>
#include <string>

#include "ptdirac/error.hpp"
#include "ptdirac/profile.hpp"

namespace ptdirac {

std::string_view to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::Thirring: return "thirring";
    case ModelTag::GrossNeveu: return "grossneveu";
    case ModelTag::NewModel: return "newmodel";
    case ModelTag::GeneralCubic: return "general";
  }
  return "unknown";
}

ModelTag parse_model_tag(std::string_view name) {
  if (name == "thirring" || name == "mtm") return ModelTag::Thirring;
  if (name == "grossneveu" || name == "gn") return ModelTag::GrossNeveu;
  if (name == "newmodel" || name == "new") return ModelTag::NewModel;
  if (name == "general") return ModelTag::GeneralCubic;
  fail(ErrorCode::ParamOutOfRange, "unknown model '" + std::string(name) + "'");
}

ModelParams ModelParams::thirring(double gamma) {
  ModelParams p{1.0, 0.0, gamma, ModelTag::Thirring};
  p.validate();
  return p;
}

ModelParams ModelParams::gross_neveu(double gamma) {
  ModelParams p{1.0, 1.0, gamma, ModelTag::GrossNeveu};
  p.validate();
  return p;
}

ModelParams ModelParams::new_model(double gamma) {
  ModelParams p{0.0, 1.0, gamma, ModelTag::NewModel};
  p.validate();
  return p;
}

ModelParams ModelParams::general(double A, double B, double gamma) {
  ModelParams p{A, B, gamma, ModelTag::GeneralCubic};
  p.validate();
  return p;
}

ModelParams ModelParams::of(ModelTag tag, double gamma) {
  switch (tag) {
    case ModelTag::Thirring: return thirring(gamma);
    case ModelTag::GrossNeveu: return gross_neveu(gamma);
    case ModelTag::NewModel: return new_model(gamma);
    case ModelTag::GeneralCubic: break;
  }
  fail(ErrorCode::ParamOutOfRange, "general model needs explicit (A, B)");
}

void ModelParams::validate() const {
  require(std::isfinite(A) && std::isfinite(B), ErrorCode::ParamOutOfRange,
          "coefficients must be finite");
  require(gamma >= 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "gamma must lie in [0, 1)");
  switch (tag) {
    case ModelTag::Thirring:
      require(A == 1.0 && B == 0.0, ErrorCode::ParamOutOfRange, "Thirring requires (A,B)=(1,0)");
      break;
    case ModelTag::GrossNeveu:
      require(A == 1.0 && B == 1.0, ErrorCode::ParamOutOfRange,
              "Gross-Neveu requires (A,B)=(1,1)");
      break;
    case ModelTag::NewModel:
      require(A == 0.0 && B == 1.0, ErrorCode::ParamOutOfRange,
              "new model requires (A,B)=(0,1)");
      break;
    case ModelTag::GeneralCubic:
      break;
  }
}

ModelTag ModelParams::resolved() const {
  if (A == 1.0 && B == 0.0) return ModelTag::Thirring;
  if (A == 1.0 && B == 1.0) return ModelTag::GrossNeveu;
  if (A == 0.0 && B == 1.0) return ModelTag::NewModel;
  return ModelTag::GeneralCubic;
}

bool ModelParams::ledger_supported() const {
  switch (resolved()) {
    case ModelTag::Thirring:
    case ModelTag::GrossNeveu: return true;
    case ModelTag::NewModel: return gamma == 0.0;
    case ModelTag::GeneralCubic: return false;
  }
  return false;
}

std::pair<cplx, cplx> dispersion_branches(Perturbation kind, double gamma, double k) {
  require(gamma >= 0.0, ErrorCode::ParamOutOfRange, "gamma must be nonnegative");
  switch (kind) {
    case Perturbation::DriftJ1: {
      const double r = std::sqrt(1.0 + k * k);
      return {-gamma * k + r, -gamma * k - r};
    }
    case Perturbation::ShiftJ2: {
      const double r = std::sqrt(1.0 + (k + gamma) * (k + gamma));
      return {r, -r};
    }
    case Perturbation::MassA5: {
      const cplx r = std::sqrt(cplx(1.0 - gamma * gamma + k * k, 0.0));
      return {r, -r};
    }
  }
  return {};
}

std::pair<cplx, cplx> coupling(const ModelParams& p, cplx u, cplx v) {
  const cplx su = (1.0 - p.gamma) * v + (p.A * u * std::conj(v) + p.B * v * std::conj(u)) * v;
  const cplx sv = (1.0 + p.gamma) * u + (p.A * v * std::conj(u) + p.B * u * std::conj(v)) * u;
  return {su, sv};
}

std::pair<cplx, cplx> rhs(const ModelParams& p, cplx u, cplx v) {
  const auto [su, sv] = coupling(p, u, v);
  return {-su, -sv};
}

void time_derivatives(const ModelParams& p, const FieldState& s, cvec& ut, cvec& vt) {
  const cvec ux = derivative4(s.u, s.grid.h);
  const cvec vx = derivative4(s.v, s.grid.h);
  const cplx I(0.0, 1.0);
  ut.resize(s.grid.n);
  vt.resize(s.grid.n);
  for (std::size_t j = 0; j < s.grid.n; ++j) {
    const auto [su, sv] = coupling(p, s.u[j], s.v[j]);
    ut[j] = ux[j] + I * su;
    vt[j] = -vx[j] + I * sv;
  }
}

ResidualNorms stationary_residual(const ModelParams& p, const UniformGrid& grid, const cvec& U,
                                  const cvec& V, double omega) {
  require(grid.n >= 9, ErrorCode::GridTooCoarse, "residual needs at least 9 nodes");
  require(U.size() == grid.n && V.size() == grid.n, ErrorCode::MeshMismatch,
          "profile arrays do not match the grid");
  const cvec Ux = derivative4(U, grid.h);
  const cvec Vx = derivative4(V, grid.h);
  const cplx I(0.0, 1.0);
  ResidualNorms r;
  for (std::size_t j = 4; j + 4 < grid.n; ++j) {
    const auto [su, sv] = coupling(p, U[j], V[j]);
    r.u = std::max(r.u, std::abs(omega * U[j] - I * Ux[j] + su));
    r.v = std::max(r.v, std::abs(omega * V[j] + I * Vx[j] + sv));
  }
  return r;
}

ResidualNorms stationary_residual(const ModelParams& p, const SolitonProfile& profile) {
  return stationary_residual(p, profile.grid, profile.u(), profile.v(), profile.omega);
}

namespace {

// Im(w z*) for the current-like terms.
inline double im_cross(cplx w, cplx z) { return std::imag(w * std::conj(z)); }

}  // namespace

Densities densities(const ModelParams& p, const FieldState& s, LedgerRequest req) {
  s.validate();
  const std::size_t n = s.grid.n;
  const double g = p.gamma;
  const ModelTag model = p.resolved();
  const bool full = req == LedgerRequest::Full;
  if (full && !p.ledger_supported())
    fail(ErrorCode::UnsupportedLedger,
         "no energy/momentum laws for " + std::string(to_string(model)) +
             (g != 0.0 ? " with gamma != 0" : ""));

  Densities d;
  d.q.resize(n);
  d.j.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double uu = std::norm(s.u[k]), vv = std::norm(s.v[k]);
    if (model == ModelTag::Thirring) {
      d.q[k] = (1.0 + g) * uu + (1.0 - g) * vv;
      d.j[k] = (1.0 - g) * vv - (1.0 + g) * uu;
    } else {
      d.q[k] = uu + vv;
      d.j[k] = vv - uu;
    }
  }
  if (!full) return d;

  const cvec ux = derivative4(s.u, s.grid.h);
  const cvec vx = derivative4(s.v, s.grid.h);
  cvec ut, vt;
  time_derivatives(p, s, ut, vt);
  d.H.resize(n);
  d.J.resize(n);
  d.P.resize(n);
  d.Phi.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx u = s.u[k], v = s.v[k];
    const double uu = std::norm(u), vv = std::norm(v);
    const double sym = 2.0 * std::real(u * std::conj(v));  // u v* + u* v
    const double kin_x_u = -im_cross(ux[k], u), kin_x_v = -im_cross(vx[k], v);
    const double kin_t_u = im_cross(ut[k], u), kin_t_v = im_cross(vt[k], v);
    switch (model) {
      case ModelTag::Thirring: {
        const double ea = uu * uu / (1.0 - g), eb = vv * vv / (1.0 + g);
        d.H[k] = kin_x_u - kin_x_v - sym - uu * vv - 0.5 * g * (ea - eb);
        d.J[k] = kin_t_u - kin_t_v + g * sym + 0.5 * g * (ea + eb);
        d.P[k] = kin_x_u + kin_x_v + g * sym - 0.5 * g * (ea + eb);
        d.Phi[k] = kin_t_u + kin_t_v - sym - uu * vv + 0.5 * g * (ea - eb);
        break;
      }
      case ModelTag::GrossNeveu: {
        d.H[k] = kin_x_u - kin_x_v - sym - 0.5 * sym * sym;
        d.J[k] = kin_t_u - kin_t_v + g * sym;
        d.P[k] = kin_x_u + kin_x_v + g * sym;
        d.Phi[k] = kin_t_u + kin_t_v - sym - 0.5 * sym * sym;
        break;
      }
      case ModelTag::NewModel: {
        const double w = std::real((u * std::conj(v)) * (u * std::conj(v)));
        d.H[k] = kin_x_u - kin_x_v - sym - w;
        d.J[k] = kin_t_u - kin_t_v;
        d.P[k] = kin_x_u + kin_x_v;
        d.Phi[k] = kin_t_u + kin_t_v - sym - w;
        break;
      }
      case ModelTag::GeneralCubic:
        break;
    }
  }
  return d;
}

ConservationSnapshot conservation_snapshot(const ModelParams& p, const FieldState& s,
                                           LedgerRequest req) {
  const Densities d = densities(p, s, req);
  const double h = s.grid.h;
  ConservationSnapshot c;
  c.q_total = trapezoid(d.q, h);
  c.j_left = d.j.front();
  c.j_right = d.j.back();
  const ModelTag model = p.resolved();
  c.charge_conserved = model == ModelTag::Thirring || p.gamma == 0.0;
  c.has_energy_momentum = req == LedgerRequest::Full;
  if (c.has_energy_momentum) {
    c.H_total = trapezoid(d.H, h);
    c.P_total = trapezoid(d.P, h);
    c.J_left = d.J.front();
    c.J_right = d.J.back();
    c.Phi_left = d.Phi.front();
    c.Phi_right = d.Phi.back();
  }
  return c;
}

}  // namespace ptdirac
