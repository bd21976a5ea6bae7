#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dqpt/band_models.hpp"
#include "dqpt/critical.hpp"
#include "dqpt/grid.hpp"
#include "dqpt/loschmidt.hpp"

using namespace dqpt;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

QuenchSpec ssh_quench(double gi, double gf) { return make_quench(Ssh{gi}, Ssh{gf}); }

QuenchSpec creutz_quench(double ti, double tf, double jv) {
  return make_quench(Creutz{ti, jv}, Creutz{tf, jv});
}

std::vector<double> linspace_times(double t_max, double dt) {
  std::vector<double> ts;
  for (double t = 0.0; t <= t_max + 0.5 * dt; t += dt) ts.push_back(t);
  return ts;
}

}  // namespace

TEST_CASE("make_grid: even-size quantization") {
  const MomentumGrid g = make_grid(4, 0.0);
  REQUIRE(g.momenta.size() == 4);
  CHECK(g.momenta[0].kx == doctest::Approx(-kPi).epsilon(1e-15));
  CHECK(g.momenta[1].kx == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(g.momenta[2].kx == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(g.momenta[3].kx == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("make_grid: flux shifts every momentum by flux/L") {
  const MomentumGrid g0 = make_grid(4, 0.0);
  const MomentumGrid g = make_grid(4, kPi);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(g.momenta[i].kx == doctest::Approx(g0.momenta[i].kx + kPi / 4).epsilon(1e-15));
}

TEST_CASE("make_grid: odd-size quantization") {
  const MomentumGrid g = make_grid(3, 0.0);
  REQUIRE(g.momenta.size() == 3);
  CHECK(g.momenta[0].kx == doctest::Approx(-2.0 * kPi / 3).epsilon(1e-15));
  CHECK(g.momenta[1].kx == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(g.momenta[2].kx == doctest::Approx(2.0 * kPi / 3).epsilon(1e-15));
}

TEST_CASE("make_grid: invalid sizes and flux are rejected") {
  CHECK_THROWS_AS(make_grid(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(8, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(8, 2.0 * kPi), std::invalid_argument);
}

TEST_CASE("make_grid: zero flux equals the PBC rule bitwise") {
  const MomentumGrid g = make_grid(10, 0.0);
  for (int i = 0; i < 10; ++i) {
    const int m = -5 + i;
    CHECK(g.momenta[i].kx == 2.0 * kPi * m / 10.0);
  }
}

TEST_CASE("make_grid: 2D cartesian product") {
  const MomentumGrid g = make_grid(4, 6, 0.3, 1.1);
  CHECK(g.cell_count() == 24);
  REQUIRE(g.momenta.size() == 24);
  CHECK(g.momenta[0].dims == 2);
  // Second axis varies fastest.
  CHECK(g.momenta[0].kx == g.momenta[1].kx);
  CHECK(g.momenta[0].ky != g.momenta[1].ky);
}

TEST_CASE("loschmidt_echo: trivial values") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const MomentumGrid g = make_grid(20, 0.0);
  CHECK(loschmidt_echo(q, g, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

  const QuenchSpec same = ssh_quench(1.5, 1.5);
  for (double t : {0.5, 2.0, 7.7})
    CHECK(loschmidt_echo(same, g, t) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("loschmidt_echo: exact zero at the critical flux and time") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const double kc = solve_critical_momenta(q).at(0);
  const double phic = critical_flux(kc, 20);
  const double t1 = critical_times(q, kc, 1).at(0);
  CHECK(phic / kPi == doctest::Approx(0.783).epsilon(2e-3));
  const MomentumGrid g = make_grid(20, phic);
  CHECK(loschmidt_echo(q, g, t1) <= 1e-12);
}

TEST_CASE("property: log-space echo equals the direct product") {
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> ug(-2.0, 2.0);
  std::uniform_real_distribution<double> uphi(0.0, 6.28);
  std::uniform_real_distribution<double> ut(0.0, 8.0);
  int checked = 0;
  while (checked < 200) {
    const QuenchSpec q = ssh_quench(ug(rng), ug(rng));
    const int L = 4 + static_cast<int>(checked % 13);
    const MomentumGrid g = make_grid(L, uphi(rng));
    const double t = ut(rng);
    double direct = 1.0;
    bool tiny = false;
    try {
      for (const auto& k : g.momenta) {
        const double lk = le_mode(q, k, t);
        if (lk < 1e-15) tiny = true;
        direct *= lk;
      }
    } catch (const DegenerateModeError&) {
      continue;
    }
    if (tiny) continue;
    const double logspace = loschmidt_echo(q, g, t);
    CHECK(logspace == doctest::Approx(direct).epsilon(1e-10));
    ++checked;
  }
}

TEST_CASE("rate_function: lambda(0) = 0 and nonnegativity") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const MomentumGrid g = make_grid(20, 0.3);
  const auto times = linspace_times(8.0, 0.01);
  const RateSeries s = rate_function(q, g, times);
  CHECK(s.lambda.front() == doctest::Approx(0.0).epsilon(1e-14));
  for (double l : s.lambda) CHECK(l >= -1e-12);
  REQUIRE(s.le.size() == s.times.size());
  CHECK(s.le.front() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("rate_function: singular peaks at the critical flux dominate the PBC curve") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const double kc = solve_critical_momenta(q).at(0);
  const double phic = critical_flux(kc, 20);
  const auto tstars = critical_times(q, kc, 2);
  auto times = with_critical_times(linspace_times(10.0, 0.005), q, 20, 10.0);

  const RateSeries flux_series = rate_function(q, make_grid(20, phic), times);
  const RateSeries pbc_series = rate_function(q, make_grid(20, 0.0), times);
  for (double tstar : tstars) {
    const auto it = std::lower_bound(times.begin(), times.end(), tstar);
    REQUIRE(it != times.end());
    const std::size_t idx = static_cast<std::size_t>(it - times.begin());
    REQUIRE(times[idx] == doctest::Approx(tstar).epsilon(1e-15));
    const double lam_flux = flux_series.lambda[idx];
    const double lam_pbc = pbc_series.lambda[idx];
    CHECK((std::isinf(lam_flux) || lam_flux > 3.0 * lam_pbc));
  }
}

TEST_CASE("rate_function: mismatched or descending times are rejected") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const MomentumGrid g = make_grid(8, 0.0);
  CHECK_THROWS_AS(rate_function(q, g, {0.0, 2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(rate_function(q, g, {-1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("property: grid-shift identity against manually listed momenta") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> uphi(0.0, 6.28);
  std::uniform_real_distribution<double> ug(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int L = 5 + trial % 9;
    const double phi = uphi(rng);
    QuenchSpec q = ssh_quench(ug(rng), ug(rng));
    const MomentumGrid g = make_grid(L, phi);
    std::vector<Momentum> manual = g.momenta;
    const MomentumGrid g2 = grid_from_momenta(std::move(manual), L);
    const auto times = linspace_times(5.0, 0.25);
    try {
      const RateSeries a = rate_function(q, g, times);
      const RateSeries b = rate_function(q, g2, times);
      for (std::size_t i = 0; i < a.lambda.size(); ++i)
        CHECK(std::abs(a.lambda[i] - b.lambda[i]) <= 1e-15 * std::max(1.0, std::abs(a.lambda[i])));
    } catch (const DegenerateModeError&) {
      continue;
    }
  }
}

TEST_CASE("local_maxima: monotone series has none") {
  RateSeries s;
  s.times = {0.0, 1.0, 2.0, 3.0};
  s.lambda = {0.0, 0.1, 0.2, 0.3};
  CHECK(local_maxima(s).empty());
  s.lambda = {0.0, 0.1};
  s.times = {0.0, 1.0};
  CHECK_THROWS_AS(local_maxima(s), std::invalid_argument);
}

TEST_CASE("local_maxima: SSH L=1100 first peak lands on the critical time") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const MomentumGrid g = make_grid(1100, 0.0);
  const RateSeries s = rate_function(q, g, linspace_times(4.0, 0.002));
  const auto peaks = local_maxima(s);
  REQUIRE(!peaks.empty());
  CHECK(std::abs(peaks.front().t - 2.565) < 0.01);
}

TEST_CASE("local_maxima: Creutz L=1200 first two peaks") {
  const QuenchSpec q = creutz_quench(0.4, -0.4, 0.5);
  const MomentumGrid g = make_grid(1200, 0.0);
  const RateSeries s = rate_function(q, g, linspace_times(3.0, 0.002));
  const auto peaks = local_maxima(s);
  REQUIRE(peaks.size() >= 2);
  CHECK(std::abs(peaks[0].t - 1.435) < 0.01);
  CHECK(std::abs(peaks[1].t - 2.176) < 0.01);
}

TEST_CASE("lambda_max_vs_flux: same-phase quench is flat, cross-phase diverges at phi_c") {
  const TimeWindow window{10.0, 0.0025};

  // Same phase: under 30% variation across [0, pi].
  {
    const QuenchSpec q = ssh_quench(1.5, 1.2);
    std::vector<double> fluxes;
    for (int i = 0; i <= 32; ++i) fluxes.push_back(kPi * i / 32);
    const auto points = lambda_max_vs_flux(q, 20, fluxes, window);
    double lo = 1e300, hi = 0.0;
    for (const auto& p : points) {
      REQUIRE(p.has_value);
      REQUIRE(std::isfinite(p.lambda_max));
      lo = std::min(lo, p.lambda_max);
      hi = std::max(hi, p.lambda_max);
    }
    CHECK(hi / lo < 1.3);
  }

  // Cross phase: the scan grid contains phi_c, where the sentinel appears.
  {
    const QuenchSpec q = ssh_quench(1.5, 0.5);
    const double phic = critical_flux(solve_critical_momenta(q).at(0), 20);
    std::vector<double> fluxes;
    for (int i = 0; i <= 16; ++i) fluxes.push_back(kPi * i / 16);
    fluxes.push_back(phic);
    std::sort(fluxes.begin(), fluxes.end());
    const auto points = lambda_max_vs_flux(q, 20, fluxes, window);
    bool divergent_at_phic = false;
    for (const auto& p : points)
      if (p.has_value && std::isinf(p.lambda_max) && std::abs(p.flux - phic) < 1e-14)
        divergent_at_phic = true;
    CHECK(divergent_at_phic);
  }
}

TEST_CASE("lambda_max_vs_flux: Creutz divergences appear at both critical fluxes") {
  const QuenchSpec q = creutz_quench(0.4, -0.4, 0.5);
  const auto kcs = solve_critical_momenta(q);
  REQUIRE(kcs.size() == 2);
  const double phic1 = critical_flux(kcs[0], 20);
  const double phic2 = critical_flux(kcs[1], 20);
  CHECK(phic1 / kPi == doctest::Approx(0.721).epsilon(2e-3));
  CHECK(phic2 / kPi == doctest::Approx(0.550).epsilon(2e-3));

  const std::vector<double> fluxes{0.2 * kPi, phic2, phic1, 0.9 * kPi};
  const auto points = lambda_max_vs_flux(q, 20, fluxes, TimeWindow{8.0, 0.0025});
  REQUIRE(points.size() == 4);
  CHECK(std::isfinite(points[0].lambda_max));
  CHECK(std::isinf(points[1].lambda_max));
  CHECK(std::isinf(points[2].lambda_max));
  CHECK(std::isfinite(points[3].lambda_max));
}

TEST_CASE("lambda_max_vs_flux: Creutz same-phase stays finite and flat-ish") {
  const QuenchSpec q = creutz_quench(0.4, 0.1, 0.5);
  std::vector<double> fluxes;
  for (int i = 0; i <= 16; ++i) fluxes.push_back(kPi * i / 16);
  const auto points = lambda_max_vs_flux(q, 20, fluxes, TimeWindow{8.0, 0.0025});
  double lo = 1e300, hi = 0.0;
  for (const auto& p : points) {
    REQUIRE(p.has_value);
    REQUIRE(std::isfinite(p.lambda_max));
    lo = std::min(lo, p.lambda_max);
    hi = std::max(hi, p.lambda_max);
  }
  CHECK(hi / lo < 1.5);
}

TEST_CASE("size_sweep: SSH converges (oscillating) to the thermodynamic values") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const std::vector<int> sizes{40, 60, 100, 180, 340, 700, 1100};
  const auto points = size_sweep(q, sizes, 0.0, TimeWindow{4.0, 0.002});
  REQUIRE(points.size() == sizes.size());
  for (const auto& p : points) REQUIRE(p.has_value);
  CHECK(std::abs(points.back().t_peak - 2.565) < 0.01);
  CHECK(std::abs(points.back().lambda_max - 0.643) < 0.01);

  // Convergence is oscillatory: consecutive differences change sign.
  bool t_sign_change = false;
  for (std::size_t i = 2; i < points.size(); ++i) {
    const double d1 = points[i - 1].t_peak - points[i - 2].t_peak;
    const double d2 = points[i].t_peak - points[i - 1].t_peak;
    if (d1 * d2 < 0.0) t_sign_change = true;
  }
  CHECK(t_sign_change);
}

TEST_CASE("size_sweep: Creutz lambda_max approaches 0.621") {
  const QuenchSpec q = creutz_quench(0.4, -0.4, 0.5);
  const auto points = size_sweep(q, {40, 100, 400, 1200}, 0.0, TimeWindow{3.0, 0.002});
  REQUIRE(points.back().has_value);
  CHECK(std::abs(points.back().lambda_max - 0.621) < 0.01);
  CHECK(std::abs(points.back().t_peak - 1.435) < 0.01);
}

TEST_CASE("size_sweep: undersized lattices are rejected") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  CHECK_THROWS_AS(size_sweep(q, {2, 40}, 0.0, TimeWindow{4.0, 0.01}), std::invalid_argument);
}
