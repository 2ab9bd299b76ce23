#include "ptdirac/existence.hpp"

#include <cmath>

#include "ptdirac/error.hpp"
#include "ptdirac/numerics.hpp"

namespace ptdirac {

namespace {

// Largest chi0 with tanh(chi0) distinguishable from 1.
constexpr double kChi0Max = 18.5;

double fg_from_chi0(double xi, double chi0) {
  const double F = std::abs(xi) < 1e-8 ? 1.0 + xi * xi / 3.0 : xi / std::tanh(xi);
  const double G = (3.0 + std::cosh(2.0 * xi + 2.0 * chi0)) /
                   (3.0 + std::cosh(3.0 * xi + 2.0 * chi0) / std::cosh(xi));
  return F - G;
}

GammaCritical gamma_c_from_chi0(double chi0) {
  auto f = [chi0](double xi) { return fg_from_chi0(xi, chi0); };
  double lo = -20.0, hi = -1e-4;
  // Small chi0 pushes the root toward 0, large chi0 away from it.
  while (f(hi) >= 0.0 && hi > -1e-14) hi *= 0.1;
  while (f(lo) <= 0.0 && lo > -1e3) lo *= 2.0;
  if (!(f(hi) < 0.0 && f(lo) > 0.0))
    fail(ErrorCode::QuadratureFailure, "no bracket for the negative root of F = G");
  const double xi = bisect(f, lo, hi, 1e-15 * std::max(1.0, std::abs(lo)), 300);
  const double rho = 1.0 / std::cosh(chi0);
  const double sh = std::sinh(xi + chi0);
  const double g = rho * (std::sinh(xi) / xi) * std::sqrt(1.0 + 0.5 * sh * sh);
  return {xi, g};
}

}  // namespace

GammaStar gamma_star() {
  auto f = [](double X) {
    const double c = std::cosh(X);
    return 1.0 + X * std::tanh(X) - 0.5 * c * c;
  };
  const double X = bisect(f, 0.5, 3.0, 1e-15, 400);
  const double g = 0.5 / std::cosh(X) * std::sqrt(std::tanh(X) / X);
  return {X, g};
}

double potential_at_origin(double chi0, double gamma) {
  const double s = 1.0 / std::cosh(0.5 * chi0);
  return 2.0 * s * s + 2.0 * gamma * gamma * chi0 * chi0 - 1.0;
}

std::optional<BimodalInterval> omega_ab(double gamma) {
  require(gamma >= 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "gamma must lie in [0, 1)");
  auto H = [gamma](double c) { return potential_at_origin(c, gamma); };
  auto to_omega = [](double c) { return kInvSqrt2 / std::tanh(c); };
  if (gamma == 0.0) {
    const double chi_a = 2.0 * std::acosh(kSqrt2);
    return BimodalInterval{kInvSqrt2, to_omega(chi_a), true};
  }
  const double cmax = 2.0 / (gamma * kSqrt2) + 10.0;
  const double cmin = golden_max([&](double c) { return -H(c); }, 0.0, cmax, 1e-12);
  if (H(cmin) >= 0.0) return std::nullopt;
  const double chi_a = bisect(H, 0.0, cmin, 1e-14);
  const double chi_b = bisect(H, cmin, cmax, 1e-14);
  return BimodalInterval{to_omega(chi_b), to_omega(chi_a), false};
}

double fg_difference(double xi, double omega) {
  return fg_from_chi0(xi, std::atanh(kSqrt2 * omega));
}

GammaCritical gamma_c_detail(double omega) {
  require(omega > 0.0 && omega < kInvSqrt2, ErrorCode::ParamOutOfRange,
          "gamma_c needs 0 < omega < 1/sqrt(2)");
  return gamma_c_from_chi0(std::atanh(kSqrt2 * omega));
}

double gamma_c(double omega) { return gamma_c_detail(omega).gamma_c; }

double omega_c(double gamma) {
  require(gamma > 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "omega_c needs 0 < gamma < 1");
  // gamma_c decreases along chi0 = atanh(sqrt(2) omega); bisect in chi0.
  const double c_lo = std::atanh(std::sqrt(1.0 - gamma * gamma));
  auto f = [gamma](double c) { return gamma_c_from_chi0(c).gamma_c - gamma; };
  if (f(kChi0Max) > 0.0) return kInvSqrt2;
  const double c = bisect(f, c_lo, kChi0Max, 1e-13, 400);
  return kInvSqrt2 * std::tanh(c);
}

DomainVerdict classify(double omega, double gamma) {
  DomainVerdict v;
  if (!(gamma >= 0.0 && gamma < 1.0) || !std::isfinite(omega)) return v;
  const double upper = std::sqrt(1.0 - gamma * gamma);
  v.to_upper = upper - omega;
  if (omega <= 0.0 || omega * omega + gamma * gamma >= 1.0) {
    v.to_lower = omega - kInvSqrt2;
    return v;
  }
  if (2.0 * omega * omega > 1.0) {
    v.status = DomainStatus::HighFreqBranch;
    v.to_lower = omega - kInvSqrt2;
    return v;
  }
  if (gamma == 0.0) {
    v.to_lower = omega - kInvSqrt2;
    return v;
  }
  const double wc = omega_c(gamma);
  v.to_lower = omega - wc;
  if (omega > wc) v.status = DomainStatus::LowFreqBranch;
  return v;
}

const char* to_string(DomainStatus s) {
  switch (s) {
    case DomainStatus::Outside: return "Outside";
    case DomainStatus::HighFreqBranch: return "HighFreqBranch";
    case DomainStatus::LowFreqBranch: return "LowFreqBranch";
  }
  return "Unknown";
}

}  // namespace ptdirac
