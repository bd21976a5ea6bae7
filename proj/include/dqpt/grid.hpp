#pragma once

#include <array>
#include <vector>

#include "dqpt/model.hpp"

namespace dqpt {

/// Quantized momenta of a finite lattice under twisted boundary conditions:
/// k = (2 pi m + flux)/L per axis, m = -L/2 .. L/2-1 (L even) or
/// m = -(L-1)/2 .. (L-1)/2 (L odd).
struct MomentumGrid {
  int dims = 1;
  std::array<int, 2> sizes{0, 0};
  std::array<double, 2> flux{0.0, 0.0};
  std::vector<Momentum> momenta;

  int cell_count() const { return dims == 1 ? sizes[0] : sizes[0] * sizes[1]; }
};

/// One-axis quantization rule; the building block for both grid dimensions.
std::vector<double> axis_momenta(int size, double flux);

MomentumGrid make_grid(int size, double flux);
MomentumGrid make_grid(int size_x, int size_y, double flux_x, double flux_y);

/// Grid with caller-supplied momenta (same evaluation path as made grids).
MomentumGrid grid_from_momenta(std::vector<Momentum> momenta, int cells);

}  // namespace dqpt
