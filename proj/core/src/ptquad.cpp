#include "ptdirac/ptquad.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ptdirac/error.hpp"
#include "ptdirac/existence.hpp"

namespace ptdirac {

const char* to_string(Branch b) { return b == Branch::HighFreq ? "HighFreq" : "LowFreq"; }

BranchConstants branch_constants(double omega, Branch branch) {
  require(omega > 0.0, ErrorCode::ParamOutOfRange, "branch constants need omega > 0");
  if (branch == Branch::HighFreq) {
    require(2.0 * omega * omega > 1.0, ErrorCode::ParamOutOfRange,
            "high-frequency branch needs 2 omega^2 > 1");
    const double rho = std::sqrt(2.0 * omega * omega - 1.0);
    return {rho, std::asinh(1.0 / rho)};
  }
  require(2.0 * omega * omega < 1.0, ErrorCode::ParamOutOfRange,
          "low-frequency branch needs 2 omega^2 < 1");
  const double rho = std::sqrt(1.0 - 2.0 * omega * omega);
  return {rho, std::asinh(kSqrt2 * omega / rho)};
}

double fixed_point_chi0(double omega, Branch branch) {
  return branch_constants(omega, branch).chi0;
}

namespace {

// (delta sinh delta - cosh delta + 1, sinh delta - delta cosh delta)
std::pair<double, double> f12(double d) {
  if (std::abs(d) < 0.5) {
    const double d2 = d * d;
    double f1 = 0.0, f2 = 0.0;
    double pw = d2;   // d^(2k)
    double fact = 2;  // (2k)!
    for (int k = 1; k <= 12; ++k) {
      f1 += (2.0 * k - 1.0) / fact * pw;
      f2 -= 2.0 * k / (fact * (2.0 * k + 1.0)) * pw * d;
      pw *= d2;
      fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return {f1, f2};
  }
  return {d * std::sinh(d) - std::cosh(d) + 1.0, std::sinh(d) - d * std::cosh(d)};
}

// Relative distance sigma / delta1^2 below which V(sigma) uses its Taylor series.
constexpr double kSeriesSwitch = 1e-4;
// Deeper bisection only resolves round-off in the integrand.
constexpr int kMaxDepth = 12;

class Orbit {
 public:
  Orbit(double omega, double gamma, Branch branch) : omega_(omega), gamma_(gamma), branch_(branch) {
    require(gamma >= 0.0 && gamma < 1.0, ErrorCode::ParamOutOfRange, "gamma must lie in [0, 1)");
    const BranchConstants bc = branch_constants(omega, branch);
    rho_ = bc.rho;
    chi0_ = bc.chi0;
    c0_ = std::cosh(chi0_);
    s0_ = std::sinh(chi0_);
  }

  double rho() const { return rho_; }
  double chi0() const { return chi0_; }

  // U as a function of delta = chi0 - chi.
  double U(double d) const {
    const double sh = std::sinh(0.5 * d);
    const double sc = std::sinh(chi0_ - 0.5 * d);
    const double g = 2.0 * gamma_ * gamma_ * d * d;
    if (branch_ == Branch::HighFreq) return 4.0 * rho_ * rho_ * sh * sh * (1.0 - sc * sc) + g;
    return -4.0 * rho_ * rho_ * sh * sh * (2.0 + sc * sc) + g;
  }

  double dU_ddelta(double d) const {
    const double sh = std::sinh(0.5 * d);
    const double c = chi0_ - 0.5 * d;
    const double sc = std::sinh(c);
    const double s2c = std::sinh(2.0 * c);
    const double g = 4.0 * gamma_ * gamma_ * d;
    if (branch_ == Branch::HighFreq)
      return 2.0 * rho_ * rho_ * (std::sinh(d) * (1.0 - sc * sc) + sh * sh * s2c) + g;
    return -2.0 * rho_ * rho_ * (std::sinh(d) * (2.0 + sc * sc) - sh * sh * s2c) + g;
  }

  double U2_at_fixed_point() const { return 4.0 * (omega_ * omega_ + gamma_ * gamma_ - 1.0); }

  // First zero of U(delta) for delta > 0.
  double find_turning_delta() const {
    if (!(U2_at_fixed_point() < 0.0))
      fail(ErrorCode::NoTurningPoint, "chi0 is not a maximum of U (omega^2 + gamma^2 >= 1)");
    const int n = 3000;
    const double d_lo = 1e-8, d_hi = 50.0;
    const double r = std::pow(d_hi / d_lo, 1.0 / n);
    auto f = [this](double d) { return U(d); };
    double dprev2 = 0.0, uprev2 = 0.0;
    double dprev = d_lo, uprev = U(d_lo);
    if (uprev >= 0.0) fail(ErrorCode::NoTurningPoint, "U is not negative next to chi0");
    for (int k = 1; k <= n; ++k) {
      const double d = d_lo * std::pow(r, k);
      const double u = U(d);
      if (u >= 0.0) return refine(bisect(f, dprev, d, 1e-15 * d, 400));
      // A thin positive bump can hide between samples; probe each local maximum.
      if (k >= 2 && uprev > uprev2 && uprev > u) {
        const double dm = golden_max(f, dprev2, d, 1e-14 * d);
        if (U(dm) >= 0.0) return refine(bisect(f, dprev2, dm, 1e-15 * dm, 400));
      }
      dprev2 = dprev;
      uprev2 = uprev;
      dprev = d;
      uprev = u;
    }
    fail(ErrorCode::NoTurningPoint, "U has no zero left of chi0");
  }

  // Orbit geometry; must be called before the map x(p).
  void build() {
    d1_ = find_turning_delta();
    u1_ = U(d1_);
    du1_ = dU_ddelta(d1_);
    const double step = 1e-4 * std::max(d1_, 1e-3);
    const double gp = dU_ddelta(d1_ + step), gm = dU_ddelta(d1_ - step);
    d2u1_ = (gp - gm) / (2.0 * step);
    d3u1_ = (gp - 2.0 * du1_ + gm) / (step * step);
    if (!(du1_ > 0.0)) fail(ErrorCode::QuadratureFailure, "turning point is not simple");
    dm_ = 0.5 * d1_;
    sm_ = std::sqrt(d1_ - dm_);
    dt_ = std::min(1e-6, 1e-3 * d1_);
    pend_ = sm_ + std::log(dm_ / dt_);
    mu_ = std::sqrt(-U2_at_fixed_point());
    xt_ = integrate(0.0, pend_);
  }

  double delta1() const { return d1_; }
  double p_end() const { return pend_; }
  double x_tail() const { return xt_; }
  double delta_tail() const { return dt_; }
  double mu() const { return mu_; }

  double delta_at(double p) const {
    if (p <= sm_) return d1_ - p * p;
    return dm_ * std::exp(-(p - sm_));
  }

  double dxdp(double p) const {
    if (p <= sm_) {
      const double sig = p * p;
      if (sig < kSeriesSwitch * d1_ * d1_) {
        const double q = 2.0 * du1_ - d2u1_ * sig + d3u1_ * sig * sig / 3.0;
        if (!(q > 0.0)) fail(ErrorCode::QuadratureFailure, "x(chi) is not monotone");
        return 2.0 / std::sqrt(q);
      }
      const double w = -2.0 * (U(d1_ - sig) - u1_);
      if (!(w > 0.0)) fail(ErrorCode::QuadratureFailure, "x(chi) is not monotone");
      return 2.0 * p / std::sqrt(w);
    }
    const double d = delta_at(p);
    const double w = -2.0 * U(d);
    if (!(w > 0.0)) fail(ErrorCode::QuadratureFailure, "x(chi) is not monotone");
    return d / std::sqrt(w);
  }

  double integrate(double pa, double pb) const { return integrate_fn(pa, pb, [this](double p) { return dxdp(p); }); }

  template <class F>
  double integrate_fn(double pa, double pb, F&& f) const {
    if (pb <= pa) return 0.0;
    double total = 0.0;
    auto piece = [&](double a, double b) {
      // Unit panels keep the adaptive rule local on the logarithmic piece.
      const int panels = std::max(1, static_cast<int>(std::ceil(b - a)));
      const double w = (b - a) / panels;
      // Depth exhaustion only flags round-off at the series switch; keep the estimate.
      for (int i = 0; i < panels; ++i) total += integrate_adaptive(f, a + i * w, a + (i + 1) * w, 1e-14, nullptr, kMaxDepth, 1e-12);
    };
    if (pa < sm_ && pb > sm_) {
      piece(pa, sm_);
      piece(sm_, pb);
    } else {
      piece(pa, pb);
    }
    if (!std::isfinite(total)) fail(ErrorCode::QuadratureFailure, "quadrature produced a non-finite value");
    return total;
  }

  // Orbit parameter p with x(p) = target, marching from (p0, x0).
  double invert(double target, double p0, double x0, double* x_out) const {
    double lo = p0, hi = pend_;
    double p = p0 + (target - x0) / dxdp(p0);
    if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      const double x = x0 + integrate(p0, p);
      const double err = x - target;
      if (std::abs(err) <= 1e-13 * std::max(1.0, std::abs(target))) {
        *x_out = x;
        return p;
      }
      if (err < 0.0) lo = p;
      else hi = p;
      double pn = p - err / dxdp(p);
      if (!(pn > lo && pn < hi)) pn = 0.5 * (lo + hi);
      if (hi - lo < 1e-15 * std::max(1.0, p)) {
        *x_out = x;
        return p;
      }
      p = pn;
    }
    fail(ErrorCode::QuadratureFailure, "inversion of x(chi) did not converge");
  }

 private:
  double refine(double d) const {
    // Newton polish of the bisection root.
    for (int i = 0; i < 3; ++i) {
      const double du = dU_ddelta(d);
      if (du == 0.0) break;
      const double dn = d - U(d) / du;
      if (!(std::abs(dn - d) < 1e-9 * std::max(1.0, d))) break;
      d = dn;
    }
    return d;
  }

  double omega_, gamma_;
  Branch branch_;
  double rho_ = 0.0, chi0_ = 0.0, c0_ = 0.0, s0_ = 0.0;
  double d1_ = 0.0, u1_ = 0.0, du1_ = 0.0, d2u1_ = 0.0, d3u1_ = 0.0;
  double dm_ = 0.0, sm_ = 0.0, dt_ = 0.0, pend_ = 0.0, mu_ = 0.0, xt_ = 0.0;
};

struct StokesPoint {
  double X, Y, Z, R;
};

// Stokes components at distance delta from chi0; Y without its sign(x).
StokesPoint stokes_at(double d, double rho, double chi0, double gamma, double absY, Branch b) {
  const double sh = std::sinh(0.5 * d);
  const double c = chi0 - 0.5 * d;
  StokesPoint s{};
  if (b == Branch::HighFreq) {
    s.R = 2.0 * kSqrt2 * rho * std::sinh(c) * sh;
    s.X = 2.0 * rho * std::cosh(c) * sh;
  } else {
    s.R = 2.0 * kSqrt2 * rho * std::cosh(c) * sh;
    s.X = 2.0 * rho * std::sinh(c) * sh;
  }
  s.Z = -kSqrt2 * gamma * d;
  s.Y = absY;
  return s;
}

std::vector<std::size_t> order_by_abs(const rvec& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return std::abs(x[i]) < std::abs(x[j]); });
  return idx;
}

}  // namespace

double potential_U(double chi, double omega, double gamma, Branch branch) {
  const Orbit o(omega, gamma, branch);
  return o.U(o.chi0() - chi);
}

double potential_dU(double chi, double omega, double gamma, Branch branch) {
  const Orbit o(omega, gamma, branch);
  return -o.dU_ddelta(o.chi0() - chi);
}

double turning_point_chi1(double omega, double gamma, Branch branch) {
  const Orbit o(omega, gamma, branch);
  return o.chi0() - o.find_turning_delta();
}

StokesTrajectory chi_profile(double omega, double gamma, Branch branch, const rvec& x) {
  Orbit o(omega, gamma, branch);
  o.build();
  StokesTrajectory t;
  const std::size_t n = x.size();
  t.x = x;
  t.chi.resize(n);
  t.delta.resize(n);
  t.X.resize(n);
  t.Y.resize(n);
  t.Z.resize(n);
  t.R.resize(n);
  t.param.resize(n);
  t.branch = branch;
  t.omega = omega;
  t.gamma = gamma;
  t.rho = o.rho();
  t.chi0 = o.chi0();
  t.chi1 = o.chi0() - o.delta1();
  t.x_tail = o.x_tail();
  t.mu = o.mu();

  double p_prev = 0.0, x_prev = 0.0;
  double last_abs = -1.0, last_p = 0.0;
  for (std::size_t i : order_by_abs(x)) {
    const double ax = std::abs(x[i]);
    double p, d;
    if (ax == last_abs) {
      p = last_p;
      d = p >= 0.0 ? o.delta_at(p) : o.delta_tail() * std::exp(-o.mu() * (ax - o.x_tail()));
    } else if (ax >= o.x_tail()) {
      p = -1.0;
      d = o.delta_tail() * std::exp(-o.mu() * (ax - o.x_tail()));
    } else if (ax == 0.0) {
      p = 0.0;
      d = o.delta1();
    } else {
      double xr;
      p = o.invert(ax, p_prev, x_prev, &xr);
      p_prev = p;
      x_prev = xr;
      d = o.delta_at(p);
    }
    last_abs = ax;
    last_p = p;
    const double uu = d == o.delta1() ? 0.0 : o.U(d);
    const double absY = std::sqrt(std::max(0.0, -uu));
    const StokesPoint s = stokes_at(d, t.rho, t.chi0, gamma, absY, branch);
    const double sgn = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
    t.delta[i] = d;
    t.chi[i] = t.chi0 - d;
    t.X[i] = s.X;
    t.Y[i] = sgn * s.Y;
    t.Z[i] = s.Z;
    t.R[i] = s.R;
    t.param[i] = p;
  }
  return t;
}

double beta_rate(double d, double omega, double gamma, Branch branch) {
  if (gamma == 0.0 || d == 0.0) return 0.0;
  if (std::abs(d) < 1e-6)
    return kSqrt2 * gamma * d * (1.0 - omega * omega - gamma * gamma) / (1.0 - gamma * gamma);
  const BranchConstants bc = branch_constants(omega, branch);
  const double rho = bc.rho, chi0 = bc.chi0;
  const double c0 = std::cosh(chi0), s0 = std::sinh(chi0);
  const auto [f1, f2] = f12(d);
  const double sh = std::sinh(0.5 * d);
  const double c = chi0 - 0.5 * d;
  const double dcosh = 2.0 * std::sinh(c) * sh;  // cosh chi0 - cosh chi
  const double dsinh = 2.0 * std::cosh(c) * sh;  // sinh chi0 - sinh chi
  double num, pref, base;
  if (branch == Branch::HighFreq) {
    num = c0 * f1 + s0 * f2;
    base = dcosh;
    pref = dsinh;
  } else {
    num = s0 * f1 + c0 * f2;
    base = dsinh;
    pref = dcosh;
  }
  const double den = rho * rho * base * base - gamma * gamma * d * d;
  const double Q = rho * rho * num / den;
  return -kSqrt2 * gamma * (pref * Q - d);
}

double beta_rate_stokes(double X, double Z, double R, double gamma) {
  return 2.0 * X * (Z * (X - 1.0) - gamma * R) / (R * R - Z * Z) - Z;
}

SolitonProfile reconstruct_profile(const StokesTrajectory& t) {
  const UniformGrid grid = UniformGrid::from_nodes(t.x);
  const std::size_t n = grid.n;
  SolitonProfile p;
  p.grid = grid;
  p.a.resize(n);
  p.b.resize(n);
  p.theta.resize(n);
  p.phi.resize(n);
  p.omega = t.omega;
  p.gamma = t.gamma;
  p.model = ModelTag::NewModel;

  for (std::size_t i = 0; i < n; ++i) {
    const double rp = t.R[i] + t.Z[i], rm = t.R[i] - t.Z[i];
    const double tol = 1e-14 * std::max(1.0, std::abs(t.R[i]));
    if (rp < -tol || rm < -tol)
      fail(ErrorCode::NegativeRadicand, "R < |Z| at x = " + std::to_string(t.x[i]));
    p.a[i] = std::sqrt(std::max(0.0, 0.5 * rp));
    p.b[i] = std::sqrt(std::max(0.0, 0.5 * rm));
  }

  rvec alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = std::atan2(t.Y[i], t.X[i]);
  alpha = unwrap_phase(alpha);

  // beta is odd: integrate the even rate along the orbit parameter for |x|.
  rvec beta(n, 0.0);
  if (t.gamma != 0.0) {
    Orbit o(t.omega, t.gamma, t.branch);
    o.build();
    auto rate = [&](double q) { return beta_rate(o.delta_at(q), t.omega, t.gamma, t.branch) * o.dxdp(q); };
    const double beta_tail_end = o.integrate_fn(0.0, o.p_end(), rate);
    const double K = kSqrt2 * t.gamma * (1.0 - t.omega * t.omega - t.gamma * t.gamma) /
                     (1.0 - t.gamma * t.gamma);
    double q_prev = 0.0, b_prev = 0.0;
    for (std::size_t i : order_by_abs(t.x)) {
      const double ax = std::abs(t.x[i]);
      const double q = t.param[i];
      double bval;
      if (q < 0.0) {
        bval = beta_tail_end + K * o.delta_tail() / o.mu() *
                                   (1.0 - std::exp(-o.mu() * (ax - o.x_tail())));
      } else {
        bval = b_prev + o.integrate_fn(q_prev, q, rate);
        q_prev = q;
        b_prev = bval;
      }
      beta[i] = t.x[i] < 0.0 ? -bval : bval;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    p.theta[i] = 0.5 * (beta[i] - alpha[i]);
    p.phi[i] = 0.5 * (alpha[i] + beta[i]);
  }
  return p;
}

SolitonProfile new_model_pt_soliton(double omega, double gamma, const UniformGrid& grid) {
  const DomainVerdict v = classify(omega, gamma);
  if (v.status == DomainStatus::Outside)
    fail(ErrorCode::OutsideExistenceDomain,
         "(omega, gamma) = (" + std::to_string(omega) + ", " + std::to_string(gamma) +
             ") lies outside the existence domain");
  require(std::abs(2.0 * omega * omega - 1.0) > 1e-14, ErrorCode::ParamOutOfRange,
          "omega = 1/sqrt(2) is the branch seam (chi0 diverges)");
  const Branch branch = 2.0 * omega * omega > 1.0 ? Branch::HighFreq : Branch::LowFreq;
  return reconstruct_profile(chi_profile(omega, gamma, branch, grid.nodes()));
}

rvec negative_frequency_R(double omega, double gamma, const rvec& x) {
  require(omega < -kInvSqrt2, ErrorCode::ParamOutOfRange,
          "second hyperbola branch needs omega < -1/sqrt(2)");
  // cosh chi0 = -sqrt(2) omega / rho: same chi0 and potential as |omega|.
  const StokesTrajectory t = chi_profile(-omega, gamma, Branch::HighFreq, x);
  rvec R(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = t.delta[i];
    R[i] = -2.0 * kSqrt2 * t.rho * std::sinh(t.chi0 - 0.5 * d) * std::sinh(0.5 * d);
  }
  return R;
}

}  // namespace ptdirac
