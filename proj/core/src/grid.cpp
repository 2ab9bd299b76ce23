#include "ptdirac/grid.hpp"

#include <cmath>

#include "ptdirac/error.hpp"

namespace ptdirac {

rvec UniformGrid::nodes() const {
  rvec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = (*this)[j];
  return x;
}

UniformGrid UniformGrid::symmetric(double L, std::size_t n) {
  require(L > 0.0 && std::isfinite(L), ErrorCode::ParamOutOfRange, "grid half-width must be positive");
  require(n >= 2, ErrorCode::GridTooCoarse, "grid needs at least 2 nodes");
  return UniformGrid{-L, 2.0 * L / static_cast<double>(n - 1), n};
}

UniformGrid UniformGrid::with_spacing(double L, double h) {
  require(L > 0.0 && h > 0.0 && h <= L, ErrorCode::ParamOutOfRange, "need 0 < h <= L");
  const auto half = static_cast<std::size_t>(std::llround(L / h));
  return UniformGrid{-h * static_cast<double>(half), h, 2 * half + 1};
}

UniformGrid UniformGrid::from_nodes(const rvec& x) {
  require(x.size() >= 2, ErrorCode::GridTooCoarse, "grid needs at least 2 nodes");
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  require(h > 0.0, ErrorCode::ParamOutOfRange, "grid must be increasing");
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double expect = x.front() + h * static_cast<double>(j);
    require(std::abs(x[j] - expect) <= 1e-9 * std::max(1.0, std::abs(expect)),
            ErrorCode::ParamOutOfRange, "grid is not uniform");
  }
  return UniformGrid{x.front(), h, x.size()};
}

void FieldState::validate() const {
  require(grid.n >= 2 && grid.h > 0.0, ErrorCode::GridTooCoarse, "field grid is empty");
  require(u.size() == grid.n && v.size() == grid.n, ErrorCode::MeshMismatch,
          "field arrays do not match the grid");
  for (std::size_t j = 0; j < grid.n; ++j)
    require(std::isfinite(u[j].real()) && std::isfinite(u[j].imag()) &&
                std::isfinite(v[j].real()) && std::isfinite(v[j].imag()),
            ErrorCode::ParamOutOfRange, "field contains non-finite values");
}

}  // namespace ptdirac
