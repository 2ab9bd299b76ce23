#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace ptdirac {

using cplx = std::complex<double>;
using rvec = std::vector<double>;
using cvec = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210484904;

// Trapezoid rule on a uniform grid with spacing h.
double trapezoid(const rvec& y, double h);

// Fourth-order centered first derivative on a uniform grid. Nodes closer than
// two points to an end use one-sided fourth-order stencils.
rvec derivative4(const rvec& f, double h);
cvec derivative4(const cvec& f, double h);

// Running integral from the first node, trapezoid plus Gregory end correction
// with fourth-order derivative estimates, so the result is O(h^4).
rvec cumulative_integral4(const rvec& f, double h);

// Root of f on [a, b] given a sign change; stops when the bracket is below tol
// or after max_iter halvings.
double bisect(const std::function<double(double)>& f, double a, double b,
              double tol = 1e-12, int max_iter = 200);

// Location of a maximum of a unimodal f on [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-12);

struct GaussRule {
  rvec nodes;    // on [-1, 1]
  rvec weights;
};

const GaussRule& gauss_legendre(int n);

// Adaptive Gauss-Legendre (10 vs 20 points with bisection). A subinterval is
// accepted when the two rules agree to its share of tol or to rel_tol relative
// to its own value. Sets *ok to false if depth runs out.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, bool* ok = nullptr, int max_depth = 40,
                          double rel_tol = 0.0);

// Local barycentric Lagrange interpolation from uniform samples, using
// `order` points centered on each query. Queries outside the sample range
// return `outside`.
rvec interpolate_uniform(double x0, double h, const rvec& y, const rvec& xq,
                         int order = 8, double outside = 0.0);
cvec interpolate_uniform(double x0, double h, const cvec& y, const rvec& xq,
                         int order = 8, cplx outside = 0.0);

// Removes 2*pi jumps from a sampled phase.
rvec unwrap_phase(const rvec& p);

double sup_norm(const cvec& f);
double sup_norm(const rvec& f);

}  // namespace ptdirac
