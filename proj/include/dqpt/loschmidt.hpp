#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dqpt/grid.hpp"
#include "dqpt/model.hpp"

namespace dqpt {

/// Sampled rate function lambda(t) = -(1/N) sum_k ln L_k(t). A sample where
/// the echo hits an exact zero carries +infinity (the divergence sentinel);
/// serializers spell it "inf".
struct RateSeries {
  std::vector<double> times;
  std::vector<double> lambda;
  std::vector<double> le;  // optional; empty or same length as times
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct Peak {
  double t = 0.0;
  double lambda = 0.0;
};

/// Sampling window [0, t_max]; dt = 0 requests the default t_max/4000.
struct TimeWindow {
  double t_max = 0.0;
  double dt = 0.0;
};

struct FluxPoint {
  double flux = 0.0;
  double lambda_max = 0.0;
  bool has_value = false;
};

struct SizePoint {
  int size = 0;
  double t_peak = 0.0;
  double lambda_max = 0.0;
  bool has_value = false;
};

/// Per-mode amplitudes and postquench energies tabulated over a grid, in grid
/// order. All downstream sums run in this fixed order, so results are
/// bit-reproducible regardless of how callers parallelize across grids.
struct ModeTable {
  std::vector<double> lambda;
  std::vector<double> eps_f;
  int cells = 0;
};

ModeTable tabulate_modes(const QuenchSpec& quench, const MomentumGrid& grid);

/// Full echo prod_k L_k(t), accumulated in log space; exact 0 once any factor
/// falls below the 1e-300 underflow floor.
double loschmidt_echo(const QuenchSpec& quench, const MomentumGrid& grid, double t);

RateSeries rate_function(const QuenchSpec& quench, const MomentumGrid& grid,
                         const std::vector<double>& times);

/// Discrete 3-point local maxima, refined by parabolic interpolation through
/// the bracketing samples; sentinel peaks are reported at the sampled t.
std::vector<Peak> local_maxima(const RateSeries& series);

std::vector<double> uniform_times(const TimeWindow& window);

/// Sorted union of `times` with the critical times of `quench` that fall
/// inside (0, t_max]; exact zeros of the echo are only observable when t_n*
/// itself is sampled. `size` selects the grid whose critical pairs matter
/// (2D pair enumeration depends on it; 1D does not).
std::vector<double> with_critical_times(std::vector<double> times, const QuenchSpec& quench,
                                        int size, double t_max);

/// Per flux value: the divergence sentinel if the window contains an exact
/// zero, otherwise the largest local maximum of lambda(t). Fluxes whose
/// series has no local maximum are reported with has_value = false.
std::vector<FluxPoint> lambda_max_vs_flux(const QuenchSpec& quench, int size,
                                          const std::vector<double>& flux_grid,
                                          const TimeWindow& window);

/// Per size at fixed flux: first local maximum of lambda(t) (peak time and
/// height), the finite-size estimate of the first critical time.
std::vector<SizePoint> size_sweep(const QuenchSpec& quench, const std::vector<int>& sizes,
                                  double flux, const TimeWindow& window);

}  // namespace dqpt
