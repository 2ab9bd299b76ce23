#include <gtest/gtest.h>

#include <cmath>

#include "ptdirac/error.hpp"
#include "ptdirac/evolution.hpp"
#include "ptdirac/models.hpp"
#include "ptdirac/solitons.hpp"
#include "support.hpp"

using namespace ptdirac;

namespace {

// Sup distance to the stationary profile after removing the best global phase.
double shape_error(const SolitonProfile& p, const FieldState& s) {
  const cvec u = p.u(), v = p.v();
  cplx overlap = 0.0;
  for (std::size_t j = 0; j < s.grid.n; ++j)
    overlap += std::conj(u[j]) * s.u[j] + std::conj(v[j]) * s.v[j];
  const cplx rot = std::polar(1.0, std::arg(overlap));
  double e = 0.0;
  for (std::size_t j = 0; j < s.grid.n; ++j)
    e = std::max({e, std::abs(s.u[j] - rot * u[j]), std::abs(s.v[j] - rot * v[j])});
  return e;
}

double centroid(const FieldState& s) {
  double m = 0.0, mx = 0.0;
  for (std::size_t j = 0; j < s.grid.n; ++j) {
    const double d = std::norm(s.u[j]) + std::norm(s.v[j]);
    m += d;
    mx += d * s.grid[j];
  }
  return mx / m;
}

}  // namespace

TEST(Evolution, ZeroDataStaysZero) {
  const UniformGrid g = UniformGrid::with_spacing(5.0, 0.05);
  const FieldState z{g, cvec(g.n, 0.0), cvec(g.n, 0.0), 0.0};
  const EvolutionResult r = evolve(ModelParams::gross_neveu(0.4), z, 2.0, 0.05);
  EXPECT_FALSE(r.blowup);
  EXPECT_EQ(sup_norm(r.final.u), 0.0);
  EXPECT_EQ(sup_norm(r.final.v), 0.0);
  EXPECT_NEAR(r.final.time, 2.0, 1e-12);
}

TEST(Evolution, RejectsBadSteps) {
  const UniformGrid g = UniformGrid::with_spacing(5.0, 0.05);
  const FieldState z{g, cvec(g.n, 0.0), cvec(g.n, 0.0), 0.0};
  EvolveOptions o;
  o.dt = 0.025;
  try {
    evolve(ModelParams::thirring(0.1), z, 1.0, 0.05, o);
    FAIL() << "expected a step-size error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CFLViolation);
  }
  EXPECT_THROW(evolve(ModelParams::thirring(0.1), z, 1.0, 0.1), Error);
}

TEST(Evolution, ThirringSolitonConservesAndKeepsShape) {
  const double gamma = 0.3;
  const UniformGrid g = UniformGrid::with_spacing(30.0, 0.01);
  const SolitonProfile p = thirring_soliton(gamma, 0.45, g);
  const EvolutionResult r = evolve(ModelParams::thirring(gamma), p.state(), 50.0, 0.01);
  ASSERT_FALSE(r.blowup);
  EXPECT_LT(r.ledger.drift_q(), 1e-6);
  EXPECT_LT(r.ledger.drift_H(), 1e-6);
  EXPECT_LT(r.ledger.drift_P(), 1e-6);
  EXPECT_LT(shape_error(p, r.final), 1e-4);
  EXPECT_EQ(r.ledger.times.size(), r.ledger.q.size());
  EXPECT_NEAR(r.ledger.times.back(), 50.0, 1e-9);
}

TEST(Evolution, SecondOrderInStep) {
  const double gamma = 0.3;
  auto err = [&](double dx) {
    const SolitonProfile p = thirring_soliton(gamma, 0.9, UniformGrid::with_spacing(25.0, dx));
    return shape_error(p, evolve(ModelParams::thirring(gamma), p.state(), 4.0, dx).final);
  };
  const double e1 = err(0.04), e2 = err(0.02), e3 = err(0.01);
  EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.3);
  EXPECT_NEAR(std::log2(e2 / e3), 2.0, 0.3);
}

TEST(Evolution, GrossNeveuEnergyMomentumButNotCharge) {
  const double gamma = 0.3, omega = 0.6;
  const UniformGrid g = UniformGrid::with_spacing(30.0, 0.01);
  const SolitonProfile p = gross_neveu_soliton(gamma, omega, g);
  const FieldState s = perturb(p, 0.05, PerturbMode::Amplitude);
  const EvolutionResult r = evolve(ModelParams::gross_neveu(gamma), s, 10.0, 0.01);
  ASSERT_FALSE(r.blowup);
  EXPECT_TRUE(r.ledger.has_energy_momentum);
  EXPECT_FALSE(r.ledger.charge_conserved);
  EXPECT_LT(r.ledger.drift_H(), 1e-5);
  EXPECT_LT(std::abs(r.ledger.P.back() - r.ledger.P.front()), 1e-6);
  EXPECT_GT(r.ledger.drift_q(), 1e-3);
}

TEST(Evolution, BlowupIsReported) {
  const UniformGrid g = UniformGrid::with_spacing(20.0, 0.02);
  const SolitonProfile p = gross_neveu_soliton(0.3, 0.6, g);
  EvolveOptions o;
  o.blowup_level = 0.9 * sup_norm(p.a);
  const EvolutionResult r =
      evolve(ModelParams::gross_neveu(0.3), perturb(p, 0.05, PerturbMode::Amplitude), 1.0, 0.02, o);
  EXPECT_TRUE(r.blowup);
  EXPECT_EQ(r.last_valid_time, r.final.time);
  EXPECT_LT(r.last_valid_time, 1.0);
}

TEST(Perturb, AmplitudeAndSeededNoise) {
  const UniformGrid g = UniformGrid::with_spacing(10.0, 0.05);
  const SolitonProfile p = thirring_soliton(0.2, 0.7, g);
  const FieldState a = perturb(p, 0.05, PerturbMode::Amplitude);
  const cvec u = p.u();
  for (std::size_t j = 0; j < g.n; ++j) EXPECT_EQ(a.u[j], 1.05 * u[j]);
  const FieldState n1 = perturb(p, 0.01, PerturbMode::Noise, 7);
  const FieldState n2 = perturb(p, 0.01, PerturbMode::Noise, 7);
  const FieldState n3 = perturb(p, 0.01, PerturbMode::Noise, 8);
  EXPECT_EQ(test::max_abs_diff(n1.u, n2.u), 0.0);
  EXPECT_EQ(test::max_abs_diff(n1.v, n2.v), 0.0);
  EXPECT_GT(test::max_abs_diff(n1.u, n3.u), 0.0);
  const double bound = 0.01 * sup_norm(u) * std::sqrt(2.0);
  EXPECT_LE(test::max_abs_diff(n1.u, u), bound);
  EXPECT_THROW(perturb(p, 0.2, PerturbMode::Amplitude), Error);
}

// The PT Thirring soliton maps onto a stationary parent soliton.
TEST(Gauge, ThirringSolitonMapsToParent) {
  const double gamma = 0.4;
  const double s = std::sqrt(1.0 - gamma * gamma);
  const SolitonProfile p = thirring_soliton(gamma, 0.8, UniformGrid::with_spacing(30.0, 0.01));
  const FieldState q = gauge_transform_thirring(p.state(), gamma, GaugeDirection::ToParent);
  EXPECT_NEAR(q.grid.h, 0.01 * s, 1e-15);
  const ResidualNorms res =
      stationary_residual(ModelParams::thirring(0.0), q.grid, q.u, q.v, p.omega / s);
  EXPECT_LT(res.max(), 1e-6);
  const FieldState back = gauge_transform_thirring(q, gamma, GaugeDirection::FromParent);
  EXPECT_LT(test::max_abs_diff(back.u, p.u()), 1e-9);
  EXPECT_LT(test::max_abs_diff(back.v, p.v()), 1e-9);
  EXPECT_NEAR(back.grid.h, 0.01, 1e-15);

  FieldState wide = p.state();
  wide.u.assign(wide.grid.n, 1.0);
  EXPECT_THROW(gauge_transform_thirring(wide, gamma, GaugeDirection::ToParent), Error);
}

TEST(ModeChange, ExamplesAndInverse) {
  const UniformGrid g{0.0, 1.0, 5};
  FieldState s{g, cvec(5, 1.0), cvec(5, 0.0), 0.0};
  const FieldState m = mode_change(s, ModeDirection::ToModes);
  EXPECT_EQ(m.u[0], cplx(0.5, 0.0));
  EXPECT_EQ(m.v[0], cplx(0.0, -0.5));
  const FieldState m2 = mode_change(FieldState{g, cvec(5, 0.0), cvec(5, 1.0), 0.0},
                                    ModeDirection::ToModes);
  EXPECT_EQ(m2.u[0], cplx(0.0, -0.5));
  EXPECT_EQ(m2.v[0], cplx(0.5, 0.0));
  for (std::size_t j = 0; j < 5; ++j) {
    s.u[j] = cplx(0.3 * j, -0.2);
    s.v[j] = cplx(1.0, 0.1 * j);
  }
  const FieldState r = mode_change(mode_change(s, ModeDirection::ToModes), ModeDirection::FromModes);
  EXPECT_LT(test::max_abs_diff(r.u, s.u), 1e-15);
  EXPECT_LT(test::max_abs_diff(r.v, s.v), 1e-15);
}

// In the linear system, real mode amplitudes make u1 grow and u2 decay at rate 2 gamma.
TEST(ModeChange, GainAndLossModes) {
  const double gamma = 0.35;
  const UniformGrid g = UniformGrid::with_spacing(15.0, 0.01);
  FieldState modes{g, cvec(g.n), cvec(g.n), 0.0};
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g[j];
    modes.u[j] = std::exp(-0.5 * x * x);
    modes.v[j] = 0.7 * std::exp(-0.3 * (x - 1.0) * (x - 1.0));
  }
  const FieldState s = mode_change(modes, ModeDirection::FromModes);
  cvec ut, vt;
  time_derivatives(ModelParams::general(0.0, 0.0, gamma), s, ut, vt);
  const FieldState dm = mode_change(FieldState{g, ut, vt, 0.0}, ModeDirection::ToModes);
  double n1 = 0.0, n2 = 0.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t j = 0; j < g.n; ++j) {
    n1 += std::norm(modes.u[j]);
    n2 += std::norm(modes.v[j]);
    r1 += 2.0 * std::real(std::conj(modes.u[j]) * dm.u[j]);
    r2 += 2.0 * std::real(std::conj(modes.v[j]) * dm.v[j]);
  }
  EXPECT_NEAR(r1 / n1, 2.0 * gamma, 1e-8);
  EXPECT_NEAR(r2 / n2, -2.0 * gamma, 1e-8);
}

// A packet on the upper branch of the linear system moves at d omega / dk.
TEST(EvolutionProperty, LinearPacketGroupVelocity) {
  const double gamma = 0.3, k = 1.0, width = 6.0;
  const double omega = std::sqrt(k * k + 1.0 - gamma * gamma);
  const UniformGrid g = UniformGrid::with_spacing(80.0, 0.02);
  FieldState s{g, cvec(g.n), cvec(g.n), 0.0};
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g[j] + 20.0;
    const cplx U = std::exp(-x * x / (2.0 * width * width)) * std::polar(1.0, k * g[j]);
    s.u[j] = U;
    s.v[j] = -(omega + k) * U / (1.0 - gamma);
  }
  const double T = 30.0;
  const EvolutionResult r = evolve(ModelParams::general(0.0, 0.0, gamma), s, T, 0.02);
  const double vg = (centroid(r.final) - centroid(s)) / T;
  EXPECT_NEAR(vg, k / omega, 0.02 * k / omega);
}
