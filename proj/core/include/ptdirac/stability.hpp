#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ptdirac/profile.hpp"

namespace ptdirac {

// Chebyshev-Gauss-Lobatto nodes x_j = -L cos(pi j / (N-1)), increasing, with
// the matching differentiation matrix.
struct CollocationMesh {
  rvec x;
  Eigen::MatrixXd D;
  double L = 0.0;
  std::size_t size() const { return x.size(); }
};

CollocationMesh collocation_mesh(std::size_t N, double L);

// Soliton components f = U, g = -V on the mesh; values below 1e-14 are zeroed.
struct MeshFields {
  cvec f, g;
};

MeshFields resample(const SolitonProfile& profile, const rvec& nodes);

// Dirichlet: z(-L) = z(L) = 0 for every component.
// Inflow: only the incoming characteristic is pinned, du(L) = 0 and dv(-L) = 0.
enum class BoundaryScheme { Dirichlet, Inflow };

const char* to_string(BoundaryScheme b);

// Mesh nodes kept for each component block.
struct BlockLayout {
  std::array<std::size_t, 4> first{};
  std::size_t count = 0;
};

BlockLayout block_layout(std::size_t N, BoundaryScheme scheme);

// Linearization H z = i lambda J z for z = (du, dv, du*, dv*) with the
// pinned boundary rows and columns removed. Blocks are ordered by component,
// then node. The model follows profile.model.
struct Pencil {
  Eigen::MatrixXcd H;
  Eigen::VectorXd J;  // diagonal of J: -1 on the first two blocks, +1 on the rest
  BlockLayout layout;
};

Pencil assemble_pencil(const SolitonProfile& profile, double gamma, double omega,
                       const CollocationMesh& mesh,
                       BoundaryScheme scheme = BoundaryScheme::Dirichlet);

// M = -i J H, so that M z = lambda z.
Eigen::MatrixXcd pencil_operator(const Pencil& pencil);

// The same operator in the real variables (Re du, Re dv, Im du, Im dv).
Eigen::MatrixXd real_operator(const SolitonProfile& profile, double gamma, double omega,
                              const CollocationMesh& mesh,
                              BoundaryScheme scheme = BoundaryScheme::Dirichlet);

enum class EigenLabel { Discrete, Continuous, Spurious };
enum class Verdict { Stable, Unstable };

const char* to_string(EigenLabel l);
const char* to_string(Verdict v);

inline constexpr double kGrowthThreshold = 0.003;

struct SpectrumReport {
  cvec eigenvalues;
  std::vector<EigenLabel> labels;
  double max_growth = 0.0;  // over non-spurious eigenvalues
  cplx leading{0.0, 0.0};   // non-spurious eigenvalue attaining max_growth, Im >= 0
  Verdict verdict = Verdict::Stable;
  std::pair<double, double> gap_edges{0.0, 0.0};
  std::size_t N = 0;
  double L = 0.0;
  std::size_t spurious = 0;
};

struct SpectrumOptions {
  BoundaryScheme boundary = BoundaryScheme::Inflow;
  double boundary_fraction = 0.05;  // outermost share of nodes, split between the ends
  double boundary_weight = 0.2;     // norm share there that marks a mode spurious
  // Off-axis modes with more than this share of their Chebyshev energy in the
  // top third of the coefficients are unresolved and marked spurious; 0 disables.
  double resolution_tail = 1e-6;
  // Modes with |Re| above the growth threshold whose mirror image -lambda is
  // farther than this multiple of |Re lambda| are marked spurious; 0 disables.
  double symmetry_tolerance = 0.25;
};

SpectrumReport spectrum(const SolitonProfile& profile, double gamma, double omega, std::size_t N,
                        double L, const SpectrumOptions& opts = {});

// Largest distance from a non-spurious eigenvalue with |Re| above the threshold
// to the nearest member of {-l, l*, -l*} in the full list.
double quadruplet_defect(const SpectrumReport& r);

struct Onset {
  double omega_inst = 0.0;
  bool band_found = false;  // false: already stable at the lowest admissible frequency
};

// Bisection in omega on max_growth > threshold between the lower domain
// boundary and sqrt(1-gamma^2), to tolerance tol.
Onset instability_onset(double gamma, std::size_t N, double L, double tol = 1e-3);

// New-model profile for the mesh half-width L (uniform spacing h).
SolitonProfile stability_profile(double omega, double gamma, double L, double h = 0.01);

}  // namespace ptdirac
