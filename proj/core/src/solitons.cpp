#include "ptdirac/solitons.hpp"

#include <cmath>
#include <string>

#include "ptdirac/error.hpp"

namespace ptdirac {

cvec SolitonProfile::u() const {
  cvec out(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) out[j] = std::polar(a[j], theta[j]);
  return out;
}

cvec SolitonProfile::v() const {
  cvec out(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) out[j] = -std::polar(b[j], phi[j]);
  return out;
}

FieldState SolitonProfile::state(double time) const {
  FieldState s;
  s.grid = grid;
  s.u = u();
  s.v = v();
  s.time = time;
  // Rotate into the lab frame at the requested time.
  if (time != 0.0) {
    const cplx rot = std::polar(1.0, -omega * time);
    for (auto& z : s.u) z *= rot;
    for (auto& z : s.v) z *= rot;
  }
  return s;
}

namespace {

SolitonProfile empty_profile(const UniformGrid& grid, double omega, double gamma, ModelTag tag) {
  SolitonProfile p;
  p.grid = grid;
  p.a.assign(grid.n, 0.0);
  p.b.assign(grid.n, 0.0);
  p.theta.assign(grid.n, 0.0);
  p.phi.assign(grid.n, 0.0);
  p.omega = omega;
  p.gamma = gamma;
  p.model = tag;
  return p;
}

void check_gamma(double gamma) {
  require(gamma >= 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "gamma must lie in [0, 1)");
}

}  // namespace

ThirringParameters thirring_parameters(double gamma, double alpha) {
  check_gamma(gamma);
  require(alpha > 0.0 && alpha < 0.5 * kPi, ErrorCode::ParamOutOfRange,
          "alpha must lie in (0, pi/2)");
  const double s = std::sqrt(1.0 - gamma * gamma);
  return {s * std::cos(2.0 * alpha), s * std::sin(2.0 * alpha)};
}

double thirring_alpha(double gamma, double omega) {
  check_gamma(gamma);
  const double s = std::sqrt(1.0 - gamma * gamma);
  require(std::abs(omega) < s, ErrorCode::ParamOutOfRange,
          "Thirring frequency must satisfy |omega| < sqrt(1 - gamma^2)");
  return 0.5 * std::acos(omega / s);
}

SolitonProfile thirring_soliton(double gamma, double alpha, const UniformGrid& grid) {
  const auto [omega, kappa] = thirring_parameters(gamma, alpha);
  SolitonProfile p = empty_profile(grid, omega, gamma, ModelTag::Thirring);
  const double fu = std::pow((1.0 - gamma) / (1.0 + gamma), 0.25);
  const double fv = 1.0 / fu;
  const double sa = std::sin(alpha), ta = std::tan(alpha);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double kx = kappa * grid[j];
    // |cosh(kx + i alpha)| = cosh(kx) sqrt(1 - sin^2(alpha) sech^2(kx))
    const double sech = 1.0 / std::cosh(kx);
    const double env = kappa * sech / std::sqrt(1.0 - sa * sa * sech * sech);
    const double mu = -2.0 * std::atan(std::tanh(kx) * ta);
    p.a[j] = fu * env;
    p.b[j] = fv * env;
    p.theta[j] = (gamma + 0.5) * mu;
    p.phi[j] = (gamma - 0.5) * mu;
  }
  return p;
}

double gross_neveu_sigma(double gamma, double omega, double x) {
  const double rho = std::sqrt(omega * omega + gamma * gamma);
  const double kappa = std::sqrt(1.0 - rho * rho);
  return -2.0 * kappa * kappa / (1.0 + rho * std::cosh(2.0 * kappa * x));
}

SolitonProfile gross_neveu_soliton(double gamma, double omega, const UniformGrid& grid) {
  check_gamma(gamma);
  require(omega > 0.0, ErrorCode::ParamOutOfRange, "Gross-Neveu frequency must be positive");
  require(omega * omega + gamma * gamma < 1.0, ErrorCode::ParamOutOfRange,
          "Gross-Neveu soliton needs omega^2 + gamma^2 < 1");
  SolitonProfile p = empty_profile(grid, omega, gamma, ModelTag::GrossNeveu);
  const double rho = std::sqrt(omega * omega + gamma * gamma);
  const double kappa = std::sqrt(1.0 - rho * rho);
  const double pre = kappa / std::sqrt(omega);
  const double ok = omega * kappa;
  auto theta0 = [&](double x) {
    return std::atan((rho * rho - gamma + (1.0 - gamma) * rho * std::exp(2.0 * kappa * x)) / ok);
  };
  auto phi0 = [&](double x) {
    return std::atan((rho * rho + gamma + (1.0 + gamma) * rho * std::exp(2.0 * kappa * x)) / ok);
  };
  const double t00 = theta0(0.0), p00 = phi0(0.0);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double x = grid[j];
    const double e = 1.0 / std::cosh(2.0 * kappa * x);  // sech, underflows to 0 safely
    const double den = e + rho;
    p.a[j] = pre * std::sqrt((rho * rho - gamma) * e * e + (1.0 - gamma) * rho * e) / den;
    p.b[j] = pre * std::sqrt((rho * rho + gamma) * e * e + (1.0 + gamma) * rho * e) / den;
    p.theta[j] = t00 - theta0(x);
    p.phi[j] = phi0(x) - p00;
  }
  return p;
}

SolitonProfile new_model_soliton_explicit(double omega, const UniformGrid& grid,
                                          PhaseBranch branch) {
  require(omega > kInvSqrt2 && omega < 1.0, ErrorCode::ParamOutOfRange,
          "explicit new-model soliton needs 1/sqrt(2) < omega < 1");
  const double lambda = std::sqrt((1.0 - omega) / (1.0 + omega));
  const double kappa = std::sqrt(1.0 - omega * omega);
  if (branch == PhaseBranch::Kink) {
    // theta = pi/2 + arctan(tanh(kappa x)/lambda); at x = 0 the amplitude
    // relation a^2 = -2 theta_x / cos(4 theta) gives -2 (1 + omega).
    const double theta = 0.5 * kPi;
    const double theta_x = omega - std::cos(2.0 * theta);
    const double a2 = -2.0 * theta_x / std::cos(4.0 * theta);
    fail(ErrorCode::ParamOutOfRange,
         "growing phase branch gives a^2 = " + std::to_string(a2) + " < 0 at x = 0");
  }
  SolitonProfile p = empty_profile(grid, omega, 0.0, ModelTag::NewModel);
  const double amp = std::sqrt(2.0 * (1.0 - omega));
  const double l2 = lambda * lambda;
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double kx = kappa * grid[j];
    const double t = std::tanh(kx), t2 = t * t;
    const double ratio = (1.0 + l2 * t2) / (1.0 - 6.0 * l2 * t2 + l2 * l2 * t2 * t2);
    p.a[j] = amp / std::cosh(kx) * std::sqrt(ratio);
    p.b[j] = p.a[j];
    p.theta[j] = -std::atan(lambda * t);
    p.phi[j] = -p.theta[j];
  }
  return p;
}

HumpInfo hump_locations(double omega) {
  require(omega > kInvSqrt2 && omega < 1.0, ErrorCode::ParamOutOfRange,
          "hump analysis needs 1/sqrt(2) < omega < 1");
  if (omega >= 0.75) return {false, 0.0};
  const double r = std::sqrt(omega * omega - 0.5);
  const double t2 =
      (1.0 + omega) / (1.0 - omega) * (1.0 - omega - r) / (1.0 + omega + r);
  const double kappa = std::sqrt(1.0 - omega * omega);
  return {true, std::atanh(std::sqrt(t2)) / kappa};
}

}  // namespace ptdirac
