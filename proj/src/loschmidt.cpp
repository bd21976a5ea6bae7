#include "dqpt/loschmidt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dqpt/band_models.hpp"
#include "dqpt/critical.hpp"

namespace dqpt {

namespace {

constexpr double kUnderflowFloor = 1e-300;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::pair<std::string, std::string>> series_metadata(const QuenchSpec& quench,
                                                                 const MomentumGrid& grid) {
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("quench", describe_quench(quench));
  std::ostringstream g;
  if (grid.dims == 1)
    g << "L=" << grid.sizes[0] << " flux=" << grid.flux[0];
  else
    g << "Lx=" << grid.sizes[0] << " Ly=" << grid.sizes[1] << " flux_x=" << grid.flux[0]
      << " flux_y=" << grid.flux[1];
  meta.emplace_back("grid", g.str());
  return meta;
}

void check_times(const std::vector<double>& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw std::invalid_argument("times must be >= 0");
    if (i > 0 && times[i] < times[i - 1])
      throw std::invalid_argument("times must be ascending");
  }
}

// Vertex of the parabola through three (not necessarily uniform) samples.
Peak refine_parabolic(double x1, double y1, double x2, double y2, double x3, double y3) {
  const double d21 = x2 - x1, d23 = x2 - x3;
  const double den = d21 * (y2 - y3) - d23 * (y2 - y1);
  if (den == 0.0 || !std::isfinite(den)) return Peak{x2, y2};
  const double shift = 0.5 * (d21 * d21 * (y2 - y3) - d23 * d23 * (y2 - y1)) / den;
  const double xv = x2 - shift;
  if (xv < std::min(x1, x3) || xv > std::max(x1, x3)) return Peak{x2, y2};
  // Lagrange evaluation at the vertex.
  const double l1 = (xv - x2) * (xv - x3) / ((x1 - x2) * (x1 - x3));
  const double l2 = (xv - x1) * (xv - x3) / ((x2 - x1) * (x2 - x3));
  const double l3 = (xv - x1) * (xv - x2) / ((x3 - x1) * (x3 - x2));
  return Peak{xv, y1 * l1 + y2 * l2 + y3 * l3};
}

double rate_from_table(const ModeTable& table, double t) {
  double logsum = 0.0;
  for (std::size_t i = 0; i < table.lambda.size(); ++i) {
    const double s = std::sin(table.eps_f[i] * t);
    const double lk = 1.0 - table.lambda[i] * s * s;
    if (lk <= kUnderflowFloor) return kInf;
    logsum += std::log(lk);
  }
  return -logsum / table.cells;
}

}  // namespace

ModeTable tabulate_modes(const QuenchSpec& quench, const MomentumGrid& grid) {
  ModeTable table;
  table.cells = grid.cell_count();
  table.lambda.reserve(grid.momenta.size());
  table.eps_f.reserve(grid.momenta.size());
  for (const auto& k : grid.momenta) {
    table.lambda.push_back(lambda_k(quench, k));
    table.eps_f.push_back(band_energy(quench.final, k));
  }
  return table;
}

double loschmidt_echo(const QuenchSpec& quench, const MomentumGrid& grid, double t) {
  double logsum = 0.0;
  for (const auto& k : grid.momenta) {
    const double lk = le_mode(quench, k, t);
    if (lk <= kUnderflowFloor) return 0.0;
    logsum += std::log(lk);
  }
  return std::exp(logsum);
}

RateSeries rate_function(const QuenchSpec& quench, const MomentumGrid& grid,
                         const std::vector<double>& times) {
  check_times(times);
  const ModeTable table = tabulate_modes(quench, grid);
  RateSeries series;
  series.metadata = series_metadata(quench, grid);
  series.times = times;
  series.lambda.reserve(times.size());
  series.le.reserve(times.size());
  for (double t : times) {
    const double lam = rate_from_table(table, t);
    series.lambda.push_back(lam);
    series.le.push_back(std::isinf(lam) ? 0.0 : std::exp(-table.cells * lam));
  }
  return series;
}

std::vector<Peak> local_maxima(const RateSeries& series) {
  const auto& t = series.times;
  const auto& y = series.lambda;
  if (t.size() < 3) throw std::invalid_argument("local_maxima: need at least 3 samples");
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (std::isinf(y[i])) {
      if (!std::isinf(y[i - 1])) peaks.push_back(Peak{t[i], kInf});
      continue;
    }
    const bool is_max =
        y[i] >= y[i - 1] && y[i] >= y[i + 1] && (y[i] > y[i - 1] || y[i] > y[i + 1]);
    if (!is_max) continue;
    peaks.push_back(refine_parabolic(t[i - 1], y[i - 1], t[i], y[i], t[i + 1], y[i + 1]));
  }
  return peaks;
}

std::vector<double> uniform_times(const TimeWindow& window) {
  if (!(window.t_max > 0.0)) throw std::invalid_argument("time window: t_max must be positive");
  const double dt = window.dt > 0.0 ? window.dt : window.t_max / 4000.0;
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(window.t_max / dt) + 2);
  for (double t = 0.0; t <= window.t_max + 0.5 * dt; t += dt) times.push_back(std::min(t, window.t_max));
  if (times.back() < window.t_max) times.push_back(window.t_max);
  return times;
}

std::vector<double> with_critical_times(std::vector<double> times, const QuenchSpec& quench,
                                        int size, double t_max) {
  std::vector<double> energies;
  try {
    if (model_dims(quench.initial) == 2) {
      // Only the x-twist enumeration matters: scans twist the x axis.
      const auto set = qwz_critical_pairs(quench, size, size, TwistAxis::x, 1);
      for (const auto& p : set.pairs) energies.push_back(p.eps_f);
    } else {
      for (double kc : solve_critical_momenta(quench))
        energies.push_back(band_energy(quench.final, kc));
    }
  } catch (const std::invalid_argument&) {
    // Degenerate constraint: nothing to insert.
  }
  constexpr double pi = 3.1415926535897932384626433832795;
  for (double ef : energies) {
    if (ef < 1e-14) continue;
    for (int n = 1;; ++n) {
      const double ts = pi * (2 * n - 1) / (2.0 * ef);
      if (ts > t_max) break;
      times.push_back(ts);
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

std::vector<FluxPoint> lambda_max_vs_flux(const QuenchSpec& quench, int size,
                                          const std::vector<double>& flux_grid,
                                          const TimeWindow& window) {
  const std::vector<double> base = uniform_times(window);
  const std::vector<double> times = with_critical_times(base, quench, size, window.t_max);
  std::vector<FluxPoint> out;
  out.reserve(flux_grid.size());
  const bool two_d = model_dims(quench.initial) == 2;
  for (double phi : flux_grid) {
    const MomentumGrid grid = two_d ? make_grid(size, size, phi, 0.0) : make_grid(size, phi);
    const RateSeries series = rate_function(quench, grid, times);
    const auto peaks = local_maxima(series);
    FluxPoint point;
    point.flux = phi;
    if (!peaks.empty()) {
      point.has_value = true;
      point.lambda_max = peaks.front().lambda;
      for (const auto& p : peaks) point.lambda_max = std::max(point.lambda_max, p.lambda);
    }
    out.push_back(point);
  }
  return out;
}

std::vector<SizePoint> size_sweep(const QuenchSpec& quench, const std::vector<int>& sizes,
                                  double flux, const TimeWindow& window) {
  for (int size : sizes)
    if (size < 4) throw std::invalid_argument("size_sweep: sizes must be >= 4");
  const std::vector<double> times = uniform_times(window);
  const bool two_d = model_dims(quench.initial) == 2;
  std::vector<SizePoint> out;
  out.reserve(sizes.size());
  for (int size : sizes) {
    const MomentumGrid grid = two_d ? make_grid(size, size, flux, 0.0) : make_grid(size, flux);
    const RateSeries series = rate_function(quench, grid, times);
    const auto peaks = local_maxima(series);
    SizePoint point;
    point.size = size;
    if (!peaks.empty()) {
      point.has_value = true;
      point.t_peak = peaks.front().t;
      point.lambda_max = peaks.front().lambda;
    }
    out.push_back(point);
  }
  return out;
}

}  // namespace dqpt
