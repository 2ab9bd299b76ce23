#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "ptdirac/error.hpp"
#include "ptdirac/models.hpp"
#include "ptdirac/solitons.hpp"
#include "support.hpp"

using namespace ptdirac;

namespace {

const UniformGrid kGrid = UniformGrid::with_spacing(30.0, 0.01);

double residual_at(double h, const std::function<SolitonProfile(const UniformGrid&)>& make,
                   const ModelParams& p) {
  return stationary_residual(p, make(UniformGrid::with_spacing(30.0, h))).max();
}

void expect_parity(const SolitonProfile& p) {
  EXPECT_LT(test::parity_defect(p.a, 1.0), 1e-12);
  EXPECT_LT(test::parity_defect(p.b, 1.0), 1e-12);
  const std::size_t mid = p.grid.n / 2;
  rvec t(p.grid.n), f(p.grid.n);
  for (std::size_t j = 0; j < p.grid.n; ++j) {
    t[j] = p.theta[j] - p.theta[mid];
    f[j] = p.phi[j] - p.phi[mid];
  }
  EXPECT_LT(test::parity_defect(t, -1.0), 1e-12);
  EXPECT_LT(test::parity_defect(f, -1.0), 1e-12);
}

}  // namespace

TEST(Thirring, ClosedFormValues) {
  const SolitonProfile p = thirring_soliton(0.0, kPi / 4.0, kGrid);
  EXPECT_NEAR(p.omega, 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.u()[kGrid.n / 2]), kSqrt2, 1e-14);
  const auto tp = thirring_parameters(0.0, kPi / 4.0);
  EXPECT_NEAR(tp.kappa, 1.0, 1e-15);
  const SolitonProfile q = thirring_soliton(0.0, 0.37, kGrid);
  EXPECT_LT(test::max_abs_diff(q.a, q.b), 1e-15);
  EXPECT_NEAR(thirring_parameters(0.6, 0.5 * kPi - 1e-9).omega, -0.8, 1e-12);
  EXPECT_THROW(thirring_parameters(0.3, 0.0), Error);
  EXPECT_NEAR(thirring_alpha(0.3, thirring_parameters(0.3, 0.6).omega), 0.6, 1e-12);
}

TEST(Thirring, ResidualAndConvergence) {
  const ModelParams m = ModelParams::thirring(0.3);
  for (double alpha : {0.3, 0.6, 1.2}) {
    auto make = [alpha](const UniformGrid& g) { return thirring_soliton(0.3, alpha, g); };
    const double r1 = residual_at(0.02, make, m), r2 = residual_at(0.01, make, m);
    if (alpha == 0.3) EXPECT_LT(r2, 1e-8);
    EXPECT_NEAR(std::log2(r1 / r2), 4.0, 0.3) << alpha;
    expect_parity(make(kGrid));
  }
}

TEST(Thirring, ChargeIsPositive) {
  for (double alpha : {0.2, 0.7, 1.3}) {
    const SolitonProfile p = thirring_soliton(0.5, alpha, kGrid);
    const double q = conservation_snapshot(ModelParams::thirring(0.5), p.state()).q_total;
    EXPECT_TRUE(std::isfinite(q));
    EXPECT_GT(q, 0.0);
  }
}

TEST(GrossNeveu, ClosedFormValues) {
  EXPECT_NEAR(gross_neveu_sigma(0.0, 0.6, 0.0), -0.8, 1e-15);
  const SolitonProfile p = gross_neveu_soliton(0.0, 0.6, kGrid);
  const double a0 = p.a[kGrid.n / 2];
  EXPECT_NEAR(a0, 0.63246, 1e-5);
  EXPECT_NEAR(p.b[kGrid.n / 2], a0, 1e-15);
  const double s = -0.8;
  EXPECT_NEAR(a0 * a0, -(1.0 + s / 2.0) * s / (2.0 * 0.6), 1e-14);
  EXPECT_LT(test::max_abs_diff(p.a, p.b), 1e-15);
  EXPECT_THROW(gross_neveu_soliton(0.3, 0.0, kGrid), Error);
  EXPECT_THROW(gross_neveu_soliton(0.6, 0.8, kGrid), Error);
}

// sigma = -2 a b cos(phi - theta) along the whole profile.
TEST(GrossNeveu, SigmaMatchesComponents) {
  const SolitonProfile p = gross_neveu_soliton(0.4, 0.5, kGrid);
  for (std::size_t j = 0; j < kGrid.n; j += 13) {
    const double sig = -2.0 * p.a[j] * p.b[j] * std::cos(p.phi[j] - p.theta[j]);
    EXPECT_NEAR(sig, gross_neveu_sigma(0.4, 0.5, kGrid[j]), 1e-12);
  }
}

TEST(GrossNeveu, ResidualPhasesAndParity) {
  const ModelParams m = ModelParams::gross_neveu(0.5);
  auto make = [](const UniformGrid& g) { return gross_neveu_soliton(0.5, 0.7, g); };
  const double r1 = residual_at(0.02, make, m), r2 = residual_at(0.01, make, m);
  EXPECT_LT(r2, 1e-8);
  EXPECT_NEAR(std::log2(r1 / r2), 4.0, 0.3);
  const SolitonProfile p = make(kGrid);
  for (std::size_t j = 1; j < kGrid.n; ++j) {
    ASSERT_LE(p.theta[j], p.theta[j - 1]);
    ASSERT_GE(p.phi[j], p.phi[j - 1]);
  }
  expect_parity(p);
}

TEST(GrossNeveu, AmplitudeVanishesAtDomainEdge) {
  const double gamma = 0.3;
  double prev = 1e300;
  for (double rho : {0.5, 0.8, 0.95, 0.99, 0.999}) {
    const double omega = std::sqrt(rho * rho - gamma * gamma);
    const double amp = sup_norm(gross_neveu_soliton(gamma, omega, kGrid).a);
    EXPECT_LT(amp, prev);
    prev = amp;
  }
  EXPECT_LT(prev, 0.05);
}

TEST(NewModelExplicit, ClosedFormValues) {
  const SolitonProfile p = new_model_soliton_explicit(0.8, kGrid);
  EXPECT_NEAR(p.a[kGrid.n / 2], std::sqrt(0.4), 1e-14);
  EXPECT_NEAR(p.theta.back(), -std::atan(1.0 / 3.0), 1e-12);
  EXPECT_LT(stationary_residual(ModelParams::new_model(0.0), p).max(), 1e-8);
  for (std::size_t j = 0; j < kGrid.n; ++j) ASSERT_GT(std::cos(4.0 * p.theta[j]), 0.0);
  expect_parity(p);
  EXPECT_THROW(new_model_soliton_explicit(0.8, kGrid, PhaseBranch::Kink), Error);
  EXPECT_THROW(new_model_soliton_explicit(kInvSqrt2, kGrid), Error);
  EXPECT_THROW(new_model_soliton_explicit(1.0, kGrid), Error);
}

TEST(NewModelExplicit, ResidualConvergence) {
  const ModelParams m = ModelParams::new_model(0.0);
  auto make = [](const UniformGrid& g) { return new_model_soliton_explicit(0.8, g); };
  const double r1 = residual_at(0.02, make, m), r2 = residual_at(0.01, make, m);
  EXPECT_LT(r2, 1e-8);
  EXPECT_NEAR(std::log2(r1 / r2), 4.0, 0.3);
}

// Hump position by brute-force search of the sampled amplitude.
TEST(NewModelExplicit, HumpLocations) {
  EXPECT_FALSE(hump_locations(0.8).bimodal);
  EXPECT_FALSE(hump_locations(0.75).bimodal);
  const UniformGrid fine{0.0, 1e-4, 50001};
  const SolitonProfile p = new_model_soliton_explicit(0.72, fine);
  std::size_t best = 0;
  for (std::size_t j = 0; j < fine.n; ++j)
    if (p.a[j] > p.a[best]) best = j;
  const HumpInfo h = hump_locations(0.72);
  ASSERT_TRUE(h.bimodal);
  EXPECT_NEAR(h.x_m, fine[best], 2e-4);
  EXPECT_NEAR(h.x_m, 1.226, 1e-3);

  const SolitonProfile q = new_model_soliton_explicit(0.9, kGrid);
  const std::size_t mid = kGrid.n / 2;
  for (std::size_t j = mid + 1; j < kGrid.n; ++j) ASSERT_LE(q.a[j], q.a[j - 1]);

  double prev = 0.0;
  for (double w : {0.74, 0.72, 0.71, 0.708, 0.7072}) {
    const double xm = hump_locations(w).x_m;
    EXPECT_GT(xm, prev);
    prev = xm;
  }
  EXPECT_GT(hump_locations(kInvSqrt2 + 1e-9).x_m, prev + 2.0);
}
