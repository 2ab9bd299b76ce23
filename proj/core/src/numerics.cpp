#include "ptdirac/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptdirac {

double trapezoid(const rvec& y, double h) {
  if (y.size() < 2) return 0.0;
  double s = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * h;
}

namespace {

template <class T>
std::vector<T> derivative4_impl(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw std::invalid_argument("derivative4 needs at least 5 nodes");
  std::vector<T> d(n);
  const double c = 1.0 / (12.0 * h);
  d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (std::size_t j = 2; j + 2 < n; ++j)
    d[j] = c * (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]);
  const std::size_t m = n - 1;
  d[m] = -c * (-25.0 * f[m] + 48.0 * f[m - 1] - 36.0 * f[m - 2] + 16.0 * f[m - 3] -
               3.0 * f[m - 4]);
  d[m - 1] = -c * (-3.0 * f[m] - 10.0 * f[m - 1] + 18.0 * f[m - 2] - 6.0 * f[m - 3] +
                   f[m - 4]);
  return d;
}

template <class T>
std::vector<T> interpolate_impl(double x0, double h, const std::vector<T>& y, const rvec& xq,
                                int order, T outside) {
  const int n = static_cast<int>(y.size());
  order = std::min(order, n);
  std::vector<double> w(order);
  double binom = 1.0;
  for (int k = 0; k < order; ++k) {
    w[k] = (k % 2 == 0 ? 1.0 : -1.0) * binom;
    binom = binom * (order - 1 - k) / (k + 1);
  }
  const double xmax = x0 + h * (n - 1);
  std::vector<T> out(xq.size());
  for (std::size_t q = 0; q < xq.size(); ++q) {
    const double x = xq[q];
    if (x < x0 - 1e-12 * h || x > xmax + 1e-12 * h) {
      out[q] = outside;
      continue;
    }
    const double t = (x - x0) / h;
    int i0 = static_cast<int>(std::floor(t)) - order / 2 + 1;
    i0 = std::clamp(i0, 0, n - order);
    T num{};
    double den = 0.0;
    bool hit = false;
    for (int k = 0; k < order; ++k) {
      const double dx = t - (i0 + k);
      if (std::abs(dx) < 1e-14) {
        out[q] = y[i0 + k];
        hit = true;
        break;
      }
      const double c = w[k] / dx;
      num += c * y[i0 + k];
      den += c;
    }
    if (!hit) out[q] = num / den;
  }
  return out;
}

std::vector<GaussRule> build_gauss_table(int nmax) {
  std::vector<GaussRule> table(nmax + 1);
  for (int n = 1; n <= nmax; ++n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      r.nodes[n - 1 - i] = x;
      r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    table[n] = std::move(r);
  }
  return table;
}

double gl_apply(const std::function<double(double)>& f, double a, double b, const GaussRule& r) {
  const double c = 0.5 * (a + b), m = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(c + m * r.nodes[i]);
  return s * m;
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b, double tol,
                    double rel_tol, int depth, bool& ok) {
  const double i1 = gl_apply(f, a, b, gauss_legendre(10));
  const double i2 = gl_apply(f, a, b, gauss_legendre(20));
  const double err = std::abs(i2 - i1);
  if (err <= tol || err <= std::max(rel_tol, 1e-15) * std::abs(i2)) return i2;
  if (depth <= 0) {
    ok = false;
    return i2;
  }
  const double c = 0.5 * (a + b);
  return adaptive_rec(f, a, c, 0.5 * tol, rel_tol, depth - 1, ok) +
         adaptive_rec(f, c, b, 0.5 * tol, rel_tol, depth - 1, ok);
}

}  // namespace

rvec derivative4(const rvec& f, double h) { return derivative4_impl(f, h); }
cvec derivative4(const cvec& f, double h) { return derivative4_impl(f, h); }

rvec cumulative_integral4(const rvec& f, double h) {
  const std::size_t n = f.size();
  rvec out(n, 0.0);
  if (n < 5) {
    for (std::size_t j = 1; j < n; ++j) out[j] = out[j - 1] + 0.5 * h * (f[j - 1] + f[j]);
    return out;
  }
  const rvec df = derivative4(f, h);
  double t = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    t += 0.5 * h * (f[j - 1] + f[j]);
    out[j] = t - h * h / 12.0 * (df[j] - df[0]);
  }
  return out;
}

double bisect(const std::function<double(double)>& f, double a, double b, double tol,
              int max_iter) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) throw std::domain_error("bisect: no sign change");
  for (int it = 0; it < max_iter && std::abs(b - a) > tol; ++it) {
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    if (fc == 0.0) return c;
    if ((fc > 0) == (fa > 0)) {
      a = c;
      fa = fc;
    } else {
      b = c;
    }
  }
  return 0.5 * (a + b);
}

double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (std::abs(b - a) > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

const GaussRule& gauss_legendre(int n) {
  static const std::vector<GaussRule> table = build_gauss_table(64);
  if (n < 1 || n > 64) throw std::out_of_range("gauss_legendre supports 1..64 points");
  return table[n];
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, bool* ok, int max_depth, double rel_tol) {
  bool good = true;
  const double r = adaptive_rec(f, a, b, tol, rel_tol, max_depth, good);
  if (ok) *ok = good;
  return r;
}

rvec interpolate_uniform(double x0, double h, const rvec& y, const rvec& xq, int order,
                         double outside) {
  return interpolate_impl(x0, h, y, xq, order, outside);
}

cvec interpolate_uniform(double x0, double h, const cvec& y, const rvec& xq, int order,
                         cplx outside) {
  return interpolate_impl(x0, h, y, xq, order, outside);
}

rvec unwrap_phase(const rvec& p) {
  rvec out = p;
  double shift = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double d = p[i] - p[i - 1];
    if (d > kPi) shift -= 2.0 * kPi;
    else if (d < -kPi) shift += 2.0 * kPi;
    out[i] = p[i] + shift;
  }
  return out;
}

double sup_norm(const cvec& f) {
  double m = 0.0;
  for (const auto& z : f) m = std::max(m, std::abs(z));
  return m;
}

double sup_norm(const rvec& f) {
  double m = 0.0;
  for (double z : f) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace ptdirac
