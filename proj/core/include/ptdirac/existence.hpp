#pragma once

#include <optional>
#include <utility>

namespace ptdirac {

struct GammaStar {
  double X_root;      // positive root of 1 + X tanh X = cosh^2(X) / 2
  double gamma_star;  // sech(X) sqrt(tanh(X) / X) / 2
};

GammaStar gamma_star();

// Value at chi = 0 of the high-frequency potential as a function of chi0:
// 2 sech^2(chi0/2) + 2 gamma^2 chi0^2 - 1.
double potential_at_origin(double chi0, double gamma);

struct BimodalInterval {
  double omega_b;
  double omega_a;
  bool omega_b_is_seam;  // gamma = 0: the interval reaches down to 1/sqrt(2)
};

// Frequencies 1/sqrt(2) <= omega_b < omega_a bounding the bimodal
// high-frequency solitons; empty for gamma >= gamma*.
std::optional<BimodalInterval> omega_ab(double gamma);

struct GammaCritical {
  double xi_c;     // negative root of F(xi) = G_omega(xi)
  double gamma_c;  // lower gain-loss bound for low-frequency solitons
};

GammaCritical gamma_c_detail(double omega);
double gamma_c(double omega);

// F(xi) - G_omega(xi) with tanh(chi0) = sqrt(2) omega.
double fg_difference(double xi, double omega);

// Lower boundary of the existence domain for 0 < gamma < 1.
double omega_c(double gamma);

enum class DomainStatus { Outside, HighFreqBranch, LowFreqBranch };

struct DomainVerdict {
  DomainStatus status = DomainStatus::Outside;
  double to_upper = 0.0;  // sqrt(1-gamma^2) - omega
  double to_lower = 0.0;  // omega - (omega_c or the 1/sqrt(2) seam)
};

DomainVerdict classify(double omega, double gamma);

const char* to_string(DomainStatus s);

}  // namespace ptdirac
