#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ptdirac/error.hpp"
#include "ptdirac/ptquad.hpp"
#include "ptdirac/stability.hpp"

using namespace ptdirac;

namespace {

SolitonProfile constant_profile(double a, double b, double L, ModelTag model) {
  SolitonProfile p;
  p.grid = UniformGrid::with_spacing(L + 1.0, 0.05);
  p.a.assign(p.grid.n, a);
  p.b.assign(p.grid.n, b);
  p.theta.assign(p.grid.n, 0.0);
  p.phi.assign(p.grid.n, 0.0);
  p.model = model;
  return p;
}

// Coupling terms written out from the field equations.
std::array<cplx, 2> couplings(double A, double B, double g, cplx u, cplx v) {
  return {(1.0 - g) * v + (A * u * std::conj(v) + B * v * std::conj(u)) * v,
          (1.0 + g) * u + (A * v * std::conj(u) + B * u * std::conj(v)) * u};
}

// Wirtinger derivatives d/dz and d/dz* of component `eq` by central differences.
std::pair<cplx, cplx> wirtinger(double A, double B, double g, cplx u, cplx v, int eq, int var) {
  const double h = 1e-5;
  auto at = [&](cplx d) {
    return var == 0 ? couplings(A, B, g, u + d, v)[eq] : couplings(A, B, g, u, v + d)[eq];
  };
  const cplx dx = (at(h) - at(-h)) / (2.0 * h);
  const cplx dy = (at(cplx(0, h)) - at(cplx(0, -h))) / (2.0 * h);
  const cplx I(0.0, 1.0);
  return {0.5 * (dx - I * dy), 0.5 * (dx + I * dy)};
}

}  // namespace

TEST(Collocation, DifferentiatesPolynomialsAndGaussians) {
  const CollocationMesh m = collocation_mesh(64, 10.0);
  EXPECT_NEAR(m.x[0], -10.0, 1e-14);
  EXPECT_NEAR(m.x[63], 10.0, 1e-14);
  for (std::size_t j = 0; j < 64; ++j) EXPECT_NEAR(m.x[j], -m.x[63 - j], 1e-14);
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(64);
  EXPECT_LT((m.D * one).cwiseAbs().maxCoeff(), 1e-11);
  Eigen::VectorXd sq(64), two(64);
  for (int j = 0; j < 64; ++j) {
    sq[j] = m.x[j] * m.x[j];
    two[j] = 2.0 * m.x[j];
  }
  EXPECT_LT((m.D * sq - two).cwiseAbs().maxCoeff(), 1e-9);

  const CollocationMesh g = collocation_mesh(128, 10.0);
  Eigen::VectorXd f(128), df(128);
  for (int j = 0; j < 128; ++j) {
    const double x = g.x[j];
    f[j] = std::exp(-x * x);
    df[j] = -2.0 * x * f[j];
  }
  EXPECT_LT((g.D * f - df).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_THROW(collocation_mesh(8, 1.0), Error);
}

TEST(Collocation, BlockLayouts) {
  const BlockLayout d = block_layout(50, BoundaryScheme::Dirichlet);
  EXPECT_EQ(d.count, 48u);
  const BlockLayout i = block_layout(50, BoundaryScheme::Inflow);
  EXPECT_EQ(i.count, 49u);
  EXPECT_EQ(i.first[0], 0u);
  EXPECT_EQ(i.first[1], 1u);
}

// Pointwise entries of H for a constant state against derivatives of the
// coupling terms.
TEST(Linearization, NodeEntriesMatchCouplingDerivatives) {
  const double gamma = 0.3, omega = 0.5;
  for (ModelTag tag : {ModelTag::NewModel, ModelTag::Thirring, ModelTag::GrossNeveu}) {
    const ModelParams mp = ModelParams::of(tag, gamma);
    const SolitonProfile p = constant_profile(0.1, 0.1, 5.0, tag);
    const CollocationMesh mesh = collocation_mesh(32, 5.0);
    const Pencil P = assemble_pencil(p, gamma, omega, mesh, BoundaryScheme::Dirichlet);
    const Eigen::Index ni = static_cast<Eigen::Index>(P.layout.count);
    const cplx U = 0.1, V = -0.1;
    const cplx I(0.0, 1.0);
    for (Eigen::Index k : {Eigen::Index(3), Eigen::Index(17)}) {
      const std::size_t node = 1 + static_cast<std::size_t>(k);
      for (int eq = 0; eq < 2; ++eq) {
        for (int var = 0; var < 2; ++var) {
          const auto [dz, dzc] = wirtinger(mp.A, mp.B, gamma, U, V, eq, var);
          double diag = 0.0;
          if (eq == var) {
            diag = omega;
            const double sign = eq == 0 ? -1.0 : 1.0;
            EXPECT_NEAR(std::abs(P.H(eq * ni + k, var * ni + k) - omega - dz -
                                 I * sign * mesh.D(node, node)),
                        0.0, 1e-8);
          } else {
            EXPECT_NEAR(std::abs(P.H(eq * ni + k, var * ni + k) - dz), 0.0, 1e-8);
          }
          EXPECT_NEAR(std::abs(P.H(eq * ni + k, (var + 2) * ni + k) - dzc), 0.0, 1e-8);
          EXPECT_NEAR(std::abs(P.H((eq + 2) * ni + k, (var + 2) * ni + k) - diag -
                               std::conj(dz) -
                               (eq == var ? I * (eq == 0 ? 1.0 : -1.0) * mesh.D(node, node)
                                          : cplx(0.0))),
                      0.0, 1e-8);
          EXPECT_NEAR(std::abs(P.H((eq + 2) * ni + k, var * ni + k) - std::conj(dzc)), 0.0, 1e-8);
        }
      }
      // Off-node entries of coupling blocks vanish.
      EXPECT_EQ(P.H(k, ni + k + 1), cplx(0.0));
    }
    EXPECT_EQ(P.J[0], -1.0);
    EXPECT_EQ(P.J[3 * ni], 1.0);
  }
}

TEST(Linearization, RealOperatorHasSameSpectrum) {
  const double gamma = 0.5, omega = 0.653;
  const SolitonProfile p = stability_profile(omega, gamma, 15.0);
  const CollocationMesh mesh = collocation_mesh(40, 15.0);
  for (BoundaryScheme s : {BoundaryScheme::Dirichlet, BoundaryScheme::Inflow}) {
    const Eigen::MatrixXcd Mc = pencil_operator(assemble_pencil(p, gamma, omega, mesh, s));
    const Eigen::MatrixXd Mr = real_operator(p, gamma, omega, mesh, s);
    ASSERT_EQ(Mc.rows(), Mr.rows());
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ce(Mc, false);
    Eigen::EigenSolver<Eigen::MatrixXd> re(Mr, false);
    std::vector<cplx> a(ce.eigenvalues().data(), ce.eigenvalues().data() + Mc.rows());
    std::vector<cplx> b(re.eigenvalues().data(), re.eigenvalues().data() + Mr.rows());
    const double scale = Mr.cwiseAbs().maxCoeff();
    for (const cplx l : a) {
      double best = 1e300;
      for (const cplx m : b) best = std::min(best, std::abs(l - m));
      EXPECT_LT(best, 1e-7 * scale) << l;
    }
  }
}

// Phase rotation and translation of a soliton are neutral directions.
TEST(Linearization, SymmetryModesAreInKernel) {
  const double gamma = 0.2, omega = 0.8, L = 40.0;
  const SolitonProfile p = stability_profile(omega, gamma, L);
  const CollocationMesh mesh = collocation_mesh(400, L);
  const Pencil P = assemble_pencil(p, gamma, omega, mesh, BoundaryScheme::Dirichlet);
  const Eigen::MatrixXcd M = pencil_operator(P);
  const MeshFields mf = resample(p, mesh.x);
  const std::size_t N = mesh.size(), ni = P.layout.count;
  Eigen::VectorXcd U(N), V(N);
  for (std::size_t j = 0; j < N; ++j) {
    U[j] = mf.f[j];
    V[j] = -mf.g[j];
  }
  const Eigen::VectorXcd Ux = mesh.D.cast<cplx>() * U, Vx = mesh.D.cast<cplx>() * V;
  const cplx I(0.0, 1.0);
  Eigen::VectorXcd phase(4 * ni), shift(4 * ni);
  for (std::size_t j = 0; j < ni; ++j) {
    const std::size_t n = j + 1;
    phase[j] = I * U[n];
    phase[ni + j] = I * V[n];
    phase[2 * ni + j] = -I * std::conj(U[n]);
    phase[3 * ni + j] = -I * std::conj(V[n]);
    shift[j] = Ux[n];
    shift[ni + j] = Vx[n];
    shift[2 * ni + j] = std::conj(Ux[n]);
    shift[3 * ni + j] = std::conj(Vx[n]);
  }
  EXPECT_LT((M * phase).norm() / phase.norm(), 1e-6);
  EXPECT_LT((M * shift).norm() / shift.norm(), 1e-6);
}

TEST(Spectrum, ZeroProfileIsStableWithGap) {
  const SolitonProfile p = constant_profile(0.0, 0.0, 20.0, ModelTag::NewModel);
  const SpectrumReport r = spectrum(p, 0.3, 0.6, 120, 20.0);
  const double s = std::sqrt(1.0 - 0.09);
  EXPECT_NEAR(r.gap_edges.first, s - 0.6, 1e-15);
  EXPECT_NEAR(r.gap_edges.second, s + 0.6, 1e-15);
  EXPECT_EQ(r.verdict, Verdict::Stable);
  EXPECT_LE(r.max_growth, kGrowthThreshold);
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
    if (r.labels[k] == EigenLabel::Continuous) EXPECT_GE(std::abs(r.eigenvalues[k].imag()), s - 0.6);
  EXPECT_THROW(spectrum(p, 0.6, 0.8, 120, 20.0), Error);
}

TEST(Spectrum, HighFrequencySolitonIsStable) {
  const SolitonProfile p = stability_profile(0.9, 0.1, 40.0);
  const SpectrumReport r = spectrum(p, 0.1, 0.9, 400, 40.0);
  EXPECT_EQ(r.verdict, Verdict::Stable) << r.max_growth;
  EXPECT_LE(r.max_growth, kGrowthThreshold);
  EXPECT_EQ(r.eigenvalues.size(), r.labels.size());
}

TEST(Spectrum, LargeGainLossIsUnstable) {
  const double gamma = 0.5, omega = 0.653;
  const SolitonProfile p = stability_profile(omega, gamma, 40.0);
  const SpectrumReport r = spectrum(p, gamma, omega, 400, 40.0);
  EXPECT_EQ(r.verdict, Verdict::Unstable);
  EXPECT_GT(r.leading.real(), 0.25);
  EXPECT_GT(r.leading.imag(), 0.25);
  EXPECT_LT(r.leading.imag(), 0.4);
  for (const cplx m : {-r.leading, std::conj(r.leading), -std::conj(r.leading)}) {
    double best = 1e300;
    for (const cplx e : r.eigenvalues) best = std::min(best, std::abs(e - m));
    EXPECT_LT(best, 1e-6);
  }
  EXPECT_LT(quadruplet_defect(r), 1e-3);
}

TEST(SpectrumProperty, RealOperatorSpectrumIsConjugateSymmetric) {
  const SolitonProfile p = stability_profile(0.75, 0.3, 20.0);
  const SpectrumReport r = spectrum(p, 0.3, 0.75, 160, 20.0);
  for (const cplx l : r.eigenvalues) {
    double best = 1e300;
    for (const cplx m : r.eigenvalues) best = std::min(best, std::abs(m - std::conj(l)));
    EXPECT_LT(best, 1e-12 * (1.0 + std::abs(l)));
  }
  std::size_t spurious = 0;
  for (EigenLabel l : r.labels) spurious += l == EigenLabel::Spurious;
  EXPECT_EQ(spurious, r.spurious);
}
