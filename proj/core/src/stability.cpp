#include "ptdirac/stability.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ptdirac/error.hpp"
#include "ptdirac/existence.hpp"
#include "ptdirac/ptquad.hpp"

namespace ptdirac {

const char* to_string(EigenLabel l) {
  switch (l) {
    case EigenLabel::Discrete: return "discrete";
    case EigenLabel::Continuous: return "continuous";
    case EigenLabel::Spurious: return "spurious";
  }
  return "unknown";
}

const char* to_string(BoundaryScheme b) {
  return b == BoundaryScheme::Dirichlet ? "dirichlet" : "inflow";
}

BlockLayout block_layout(std::size_t N, BoundaryScheme scheme) {
  require(N >= 3, ErrorCode::MeshMismatch, "mesh too small for boundary conditions");
  if (scheme == BoundaryScheme::Dirichlet) return {{1, 1, 1, 1}, N - 2};
  // du travels left (pinned at +L), dv travels right (pinned at -L)
  return {{0, 1, 0, 1}, N - 1};
}

const char* to_string(Verdict v) { return v == Verdict::Stable ? "Stable" : "Unstable"; }

CollocationMesh collocation_mesh(std::size_t N, double L) {
  require(N >= 16, ErrorCode::ParamOutOfRange, "collocation needs at least 16 nodes");
  require(L > 0.0 && std::isfinite(L), ErrorCode::ParamOutOfRange, "half-width must be positive");
  const std::size_t n = N - 1;
  const double dn = static_cast<double>(n);
  CollocationMesh m;
  m.L = L;
  m.x.resize(N);
  rvec w(N);
  for (std::size_t j = 0; j < N; ++j) {
    // sin form keeps the nodes exactly antisymmetric
    m.x[j] = L * std::sin(kPi * (2.0 * static_cast<double>(j) - dn) / (2.0 * dn));
    w[j] = ((j % 2) ? -1.0 : 1.0) * ((j == 0 || j == n) ? 0.5 : 1.0);
  }
  m.D.resize(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      // x_i - x_j on [-1, 1] without cancellation
      const double di = static_cast<double>(i), dj = static_cast<double>(j);
      const double dx = 2.0 * std::sin(kPi * (di + dj) / (2.0 * dn)) *
                        std::sin(kPi * (di - dj) / (2.0 * dn));
      const double e = (w[j] / w[i]) / (L * dx);
      m.D(i, j) = e;
      diag -= e;
    }
    m.D(i, i) = diag;
  }
  return m;
}

MeshFields resample(const SolitonProfile& profile, const rvec& nodes) {
  const UniformGrid& g = profile.grid;
  MeshFields m;
  m.f = interpolate_uniform(g.x0, g.h, profile.u(), nodes, 8, cplx(0.0));
  m.g = interpolate_uniform(g.x0, g.h, profile.v(), nodes, 8, cplx(0.0));
  for (auto& z : m.g) z = -z;
  for (auto* v : {&m.f, &m.g})
    for (auto& z : *v)
      if (std::abs(z) < 1e-14) z = 0.0;
  return m;
}

namespace {

using Block = std::array<std::array<cplx, 4>, 4>;

// Pointwise 4x4 coupling of H at one node (without the derivative part).
Block node_block(const ModelParams& p, double omega, cplx U, cplx V) {
  const double A = p.A, B = p.B, g = p.gamma;
  const cplx Uc = std::conj(U), Vc = std::conj(V);
  Block c{};
  c[0][0] = omega + A * std::norm(V);
  c[0][1] = (1.0 - g) + A * U * Vc + 2.0 * B * V * Uc;
  c[0][2] = B * V * V;
  c[0][3] = A * U * V;
  c[1][0] = (1.0 + g) + A * V * Uc + 2.0 * B * U * Vc;
  c[1][1] = omega + A * std::norm(U);
  c[1][2] = A * V * U;
  c[1][3] = B * U * U;
  c[2][0] = B * Vc * Vc;
  c[2][1] = A * Uc * Vc;
  c[2][2] = omega + A * std::norm(V);
  c[2][3] = (1.0 - g) + A * Uc * V + 2.0 * B * Vc * U;
  c[3][0] = A * Vc * Uc;
  c[3][1] = B * Uc * Uc;
  c[3][2] = (1.0 + g) + A * Vc * U + 2.0 * B * Uc * V;
  c[3][3] = omega + A * std::norm(U);
  return c;
}

constexpr std::array<double, 4> kDerivSign{-1.0, 1.0, 1.0, -1.0};
constexpr std::array<double, 4> kJ{-1.0, -1.0, 1.0, 1.0};

void check_gap(double gamma, double omega) {
  require(omega * omega + gamma * gamma < 1.0, ErrorCode::GapCollapse,
          "omega^2 + gamma^2 >= 1 closes the spectral gap");
}

// Rows map node values (increasing x) to Chebyshev coefficients.
Eigen::MatrixXd chebyshev_transform(std::size_t N) {
  const std::size_t n = N - 1;
  Eigen::MatrixXd C(N, N);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j) {
      const double cj = (j == 0 || j == n) ? 0.5 : 1.0;
      const double ck = (k == 0 || k == n) ? 0.5 : 1.0;
      C(k, j) = 2.0 / static_cast<double>(n) * ck * cj *
                std::cos(kPi * static_cast<double>(j * k % (2 * n)) / static_cast<double>(n));
    }
  return C;
}

ModelParams params_for(const SolitonProfile& profile, double gamma) {
  return ModelParams::of(profile.model, gamma);
}

}  // namespace

Pencil assemble_pencil(const SolitonProfile& profile, double gamma, double omega,
                       const CollocationMesh& mesh, BoundaryScheme scheme) {
  require(mesh.D.rows() == static_cast<Eigen::Index>(mesh.size()) && mesh.size() >= 3,
          ErrorCode::MeshMismatch, "differentiation matrix does not match the nodes");
  require(profile.a.size() == profile.grid.n && profile.theta.size() == profile.grid.n,
          ErrorCode::MeshMismatch, "profile arrays do not match its grid");
  const ModelParams p = params_for(profile, gamma);
  const MeshFields mf = resample(profile, mesh.x);
  Pencil P;
  P.layout = block_layout(mesh.size(), scheme);
  const auto& first = P.layout.first;
  const Eigen::Index ni = static_cast<Eigen::Index>(P.layout.count);
  P.H = Eigen::MatrixXcd::Zero(4 * ni, 4 * ni);
  P.J.resize(4 * ni);
  const cplx I(0.0, 1.0);
  for (int c = 0; c < 4; ++c) {
    P.J.segment(c * ni, ni).setConstant(kJ[c]);
    const auto f = static_cast<Eigen::Index>(first[c]);
    P.H.block(c * ni, c * ni, ni, ni) = (I * kDerivSign[c]) * mesh.D.block(f, f, ni, ni).cast<cplx>();
  }
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (Eigen::Index k = 0; k < ni; ++k) {
        // Row and column must refer to the same mesh node.
        const std::size_t node = first[r] + static_cast<std::size_t>(k);
        if (node < first[c] || node >= first[c] + P.layout.count) continue;
        const Block b = node_block(p, omega, mf.f[node], -mf.g[node]);
        P.H(r * ni + k, c * ni + static_cast<Eigen::Index>(node - first[c])) += b[r][c];
      }
  return P;
}

Eigen::MatrixXcd pencil_operator(const Pencil& pencil) {
  const cplx mI(0.0, -1.0);
  return (mI * pencil.J).asDiagonal() * pencil.H;
}

Eigen::MatrixXd real_operator(const SolitonProfile& profile, double gamma, double omega,
                              const CollocationMesh& mesh, BoundaryScheme scheme) {
  require(mesh.D.rows() == static_cast<Eigen::Index>(mesh.size()) && mesh.size() >= 3,
          ErrorCode::MeshMismatch, "differentiation matrix does not match the nodes");
  const ModelParams p = params_for(profile, gamma);
  const MeshFields mf = resample(profile, mesh.x);
  const BlockLayout lay = block_layout(mesh.size(), scheme);
  const Eigen::Index ni = static_cast<Eigen::Index>(lay.count);
  const cplx I(0.0, 1.0);
  // (du, dv, du*, dv*) = Tinv (Re du, Re dv, Im du, Im dv)
  Eigen::Matrix4cd Tinv;
  Tinv << 1, 0, I, 0,
          0, 1, 0, I,
          1, 0, -I, 0,
          0, 1, 0, -I;
  const Eigen::Matrix4cd T = Tinv.inverse();

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4 * ni, 4 * ni);
  // -i J (i s D) = J s D = +D for the u parts, -D for the v parts
  constexpr std::array<double, 4> kTransport{1.0, -1.0, 1.0, -1.0};
  for (int c = 0; c < 4; ++c) {
    const auto f = static_cast<Eigen::Index>(lay.first[c]);
    M.block(c * ni, c * ni, ni, ni) = kTransport[c] * mesh.D.block(f, f, ni, ni);
  }
  // The real transform mixes du with du* and dv with dv*, which share nodes.
  for (std::size_t node = 0; node < mesh.size(); ++node) {
    const Block b = node_block(p, omega, mf.f[node], -mf.g[node]);
    Eigen::Matrix4cd C;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) C(r, c) = -I * kJ[r] * b[r][c];
    const Eigen::Matrix4cd R = T * C * Tinv;
    for (int r = 0; r < 4; ++r) {
      if (node < lay.first[r] || node >= lay.first[r] + lay.count) continue;
      for (int c = 0; c < 4; ++c) {
        if (node < lay.first[c] || node >= lay.first[c] + lay.count) continue;
        M(r * ni + static_cast<Eigen::Index>(node - lay.first[r]),
          c * ni + static_cast<Eigen::Index>(node - lay.first[c])) += R(r, c).real();
      }
    }
  }
  return M;
}

SolitonProfile stability_profile(double omega, double gamma, double L, double h) {
  return new_model_pt_soliton(omega, gamma, UniformGrid::with_spacing(L, h));
}

SpectrumReport spectrum(const SolitonProfile& profile, double gamma, double omega, std::size_t N,
                        double L, const SpectrumOptions& opts) {
  check_gap(gamma, omega);
  const CollocationMesh mesh = collocation_mesh(N, L);
  Eigen::MatrixXd M = real_operator(profile, gamma, omega, mesh, opts.boundary);
  const lapack_int n = static_cast<lapack_int>(M.rows());
  const BlockLayout lay = block_layout(N, opts.boundary);
  const std::size_t ni = lay.count;

  rvec wr(n), wi(n);
  Eigen::MatrixXd VR(n, n);
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', n, M.data(), n, wr.data(),
                                        wi.data(), nullptr, 1, VR.data(), n);
  if (info != 0)
    fail(ErrorCode::EigensolveFailure, "dgeev returned info = " + std::to_string(info));

  SpectrumReport r;
  r.N = N;
  r.L = L;
  const double s = std::sqrt(1.0 - gamma * gamma);
  r.gap_edges = {s - omega, s + omega};
  r.eigenvalues.resize(n);
  r.labels.resize(n);

  const std::size_t edge = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(0.5 * opts.boundary_fraction * N)));
  rvec weight(N);
  std::vector<lapack_int> candidates;
  for (lapack_int k = 0; k < n; ++k) {
    r.eigenvalues[k] = cplx(wr[k], wi[k]);
    // Columns k, k+1 hold the real and imaginary parts of a conjugate pair.
    const lapack_int cr = (wi[k] < 0.0) ? k - 1 : k;
    const bool pair = wi[k] != 0.0;
    std::fill(weight.begin(), weight.end(), 0.0);
    for (int c = 0; c < 4; ++c)
      for (std::size_t j = 0; j < ni; ++j) {
        const Eigen::Index row = c * static_cast<Eigen::Index>(ni) + static_cast<Eigen::Index>(j);
        double w = VR(row, cr) * VR(row, cr);
        if (pair) w += VR(row, cr + 1) * VR(row, cr + 1);
        weight[lay.first[c] + j] += w;
      }
    double total = 0.0, outer = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      total += weight[j];
      if (j < edge || j + edge >= N) outer += weight[j];
    }
    if (total > 0.0 && outer > opts.boundary_weight * total) {
      r.labels[k] = EigenLabel::Spurious;
    } else if (std::abs(wr[k]) < 1e-8 && std::abs(wi[k]) >= r.gap_edges.first) {
      r.labels[k] = EigenLabel::Continuous;
    } else {
      r.labels[k] = EigenLabel::Discrete;
      if (opts.resolution_tail > 0.0 && (wi[k] >= 0.0)) candidates.push_back(k);
    }
  }

  if (!candidates.empty()) {
    // Chebyshev coefficients of every component of every candidate, pinned nodes set to zero.
    const Eigen::Index nc = static_cast<Eigen::Index>(candidates.size());
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N), 8 * nc);
    for (Eigen::Index q = 0; q < nc; ++q) {
      const lapack_int k = candidates[q];
      const bool pair = wi[k] != 0.0;
      for (int c = 0; c < 4; ++c)
        for (std::size_t j = 0; j < ni; ++j) {
          const Eigen::Index row = c * static_cast<Eigen::Index>(ni) + static_cast<Eigen::Index>(j);
          const auto node = static_cast<Eigen::Index>(lay.first[c] + j);
          F(node, 8 * q + 2 * c) = VR(row, k);
          if (pair) F(node, 8 * q + 2 * c + 1) = VR(row, k + 1);
        }
    }
    const Eigen::MatrixXd A = chebyshev_transform(N) * F;
    const auto top = static_cast<Eigen::Index>((2 * N) / 3);
    for (Eigen::Index q = 0; q < nc; ++q) {
      const auto cols = A.middleCols(8 * q, 8);
      const double all = cols.squaredNorm();
      const double tail = cols.bottomRows(static_cast<Eigen::Index>(N) - top).squaredNorm();
      if (all > 0.0 && tail > opts.resolution_tail * all) {
        const lapack_int k = candidates[q];
        r.labels[k] = EigenLabel::Spurious;
        if (wi[k] != 0.0) r.labels[k + 1] = EigenLabel::Spurious;
      }
    }
  }

  if (opts.symmetry_tolerance > 0.0) {
    std::vector<lapack_int> orphans;
    for (lapack_int k = 0; k < n; ++k) {
      if (r.labels[k] == EigenLabel::Spurious || std::abs(wr[k]) <= kGrowthThreshold) continue;
      const cplx mirror = -r.eigenvalues[k];
      double best = std::numeric_limits<double>::infinity();
      for (lapack_int m = 0; m < n; ++m) best = std::min(best, std::abs(r.eigenvalues[m] - mirror));
      if (best > opts.symmetry_tolerance * std::abs(wr[k])) orphans.push_back(k);
    }
    for (lapack_int k : orphans) r.labels[k] = EigenLabel::Spurious;
  }

  r.max_growth = -std::numeric_limits<double>::infinity();
  for (lapack_int k = 0; k < n; ++k) {
    if (r.labels[k] == EigenLabel::Spurious) {
      ++r.spurious;
      continue;
    }
    if (wr[k] > r.max_growth || (wr[k] == r.max_growth && wi[k] > r.leading.imag())) {
      r.max_growth = wr[k];
      r.leading = cplx(wr[k], std::abs(wi[k]));
    }
  }
  if (!std::isfinite(r.max_growth)) r.max_growth = 0.0;
  r.verdict = r.max_growth > kGrowthThreshold ? Verdict::Unstable : Verdict::Stable;
  return r;
}

double quadruplet_defect(const SpectrumReport& r) {
  double worst = 0.0;
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    const cplx l = r.eigenvalues[k];
    if (r.labels[k] == EigenLabel::Spurious || std::abs(l.real()) <= kGrowthThreshold) continue;
    for (const cplx m : {-l, std::conj(l), -std::conj(l)}) {
      double best = std::numeric_limits<double>::infinity();
      for (const cplx e : r.eigenvalues) best = std::min(best, std::abs(e - m));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

Onset instability_onset(double gamma, std::size_t N, double L, double tol) {
  require(gamma >= 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "gamma must lie in [0, 1)");
  const double upper = std::sqrt(1.0 - gamma * gamma);
  const double lower = gamma == 0.0 ? kInvSqrt2 : omega_c(gamma);
  auto unstable = [&](double w) {
    const SolitonProfile p = stability_profile(w, gamma, L);
    return spectrum(p, gamma, w, N, L).verdict == Verdict::Unstable;
  };
  double lo = lower + std::min(5e-4, 0.01 * (upper - lower));
  double hi = upper - std::min(0.01, 0.05 * (upper - lower));
  if (!unstable(lo)) return {lo, false};
  if (unstable(hi)) return {hi, true};
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (unstable(mid)) lo = mid;
    else hi = mid;
  }
  return {0.5 * (lo + hi), true};
}

}  // namespace ptdirac
