#include "dqpt/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace dqpt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::vector<double> axis_momenta(int size, double flux) {
  if (size < 2) throw std::invalid_argument("make_grid: size must be >= 2");
  if (!std::isfinite(flux) || flux < 0.0 || flux >= kTwoPi)
    throw std::invalid_argument("make_grid: flux must lie in [0, 2*pi)");
  const int m_lo = (size % 2 == 0) ? -size / 2 : -(size - 1) / 2;
  std::vector<double> ks;
  ks.reserve(size);
  for (int i = 0; i < size; ++i) {
    const int m = m_lo + i;
    ks.push_back((kTwoPi * m + flux) / size);
  }
  return ks;
}

MomentumGrid make_grid(int size, double flux) {
  MomentumGrid grid;
  grid.dims = 1;
  grid.sizes = {size, 0};
  grid.flux = {flux, 0.0};
  for (double k : axis_momenta(size, flux)) grid.momenta.push_back(Momentum::one(k));
  return grid;
}

MomentumGrid make_grid(int size_x, int size_y, double flux_x, double flux_y) {
  MomentumGrid grid;
  grid.dims = 2;
  grid.sizes = {size_x, size_y};
  grid.flux = {flux_x, flux_y};
  const auto kxs = axis_momenta(size_x, flux_x);
  const auto kys = axis_momenta(size_y, flux_y);
  grid.momenta.reserve(static_cast<std::size_t>(size_x) * size_y);
  for (double kx : kxs)
    for (double ky : kys) grid.momenta.push_back(Momentum::two(kx, ky));
  return grid;
}

MomentumGrid grid_from_momenta(std::vector<Momentum> momenta, int cells) {
  if (momenta.empty()) throw std::invalid_argument("grid_from_momenta: empty momentum list");
  if (cells < 1) throw std::invalid_argument("grid_from_momenta: cells must be positive");
  MomentumGrid grid;
  grid.dims = momenta.front().dims;
  grid.sizes = {cells, 0};
  grid.momenta = std::move(momenta);
  return grid;
}

}  // namespace dqpt
