#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dqpt/critical.hpp"
#include "dqpt/grid.hpp"
#include "dqpt/loschmidt.hpp"
#include "dqpt/thermo.hpp"

using namespace dqpt;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

QuenchSpec ssh_quench(double gi, double gf) { return make_quench(Ssh{gi}, Ssh{gf}); }

QuenchSpec creutz_quench(double ti, double tf, double jv) {
  return make_quench(Creutz{ti, jv}, Creutz{tf, jv});
}

}  // namespace

TEST_CASE("thermo_rate: t = 0 gives 0, 2D is rejected") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  CHECK(thermo_rate(q, 0.0) == 0.0);
  CHECK_THROWS_AS(thermo_rate(make_quench(QiWuZhang{0.3}, QiWuZhang{-0.9}), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(thermo_rate(q, -1.0), std::invalid_argument);
}

TEST_CASE("thermo_rate: SSH cusp height at the first critical time") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const double kc = solve_critical_momenta(q).at(0);
  const double t1 = critical_times(q, kc, 1).at(0);
  const double val = thermo_rate(q, t1);
  // Independent quadrature (SciPy, log-singularity pre-split) gives
  // 0.6433168640579 +- 2e-13.
  CHECK(std::abs(val - 0.6433168640579) < 1e-6);
}

TEST_CASE("thermo_rate: Creutz cusp height at t_{1,1}") {
  const QuenchSpec q = creutz_quench(0.4, -0.4, 0.5);
  const double kc1 = solve_critical_momenta(q).at(0);
  const double t11 = critical_times(q, kc1, 1).at(0);
  const double val = thermo_rate(q, t11);
  CHECK(std::abs(val - 0.6210052473573) < 1e-6);
}

TEST_CASE("thermo_rate: stable under doubling the base panel count") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const double t1 = critical_times(q, solve_critical_momenta(q).at(0), 1).at(0);
  const double a = thermo_rate(q, t1, 1);
  const double b = thermo_rate(q, t1, 2);
  CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("thermo_series: zero sample and cusp structure at t1") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const RateSeries zero = thermo_series(q, {0.0});
  CHECK(zero.lambda.size() == 1);
  CHECK(zero.lambda[0] == 0.0);

  const double t1 = critical_times(q, solve_critical_momenta(q).at(0), 1).at(0);
  const double eps = 0.01;
  const RateSeries s = thermo_series(q, {t1 - eps, t1, t1 + eps});
  for (double l : s.lambda) {
    CHECK(std::isfinite(l));
    CHECK(l >= 0.0);
  }
  const double left_slope = (s.lambda[1] - s.lambda[0]) / eps;
  const double right_slope = (s.lambda[2] - s.lambda[1]) / eps;
  // A cusp: finite slopes with a finite jump between them, no divergence.
  CHECK(std::abs(left_slope - 0.244) < 0.05);
  CHECK(std::abs(right_slope + 0.726) < 0.05);
  CHECK(std::abs(right_slope - left_slope) > 0.5);
}

TEST_CASE("thermo vs finite size: L=1100 matches pointwise away from critical times") {
  const QuenchSpec q = ssh_quench(1.5, 0.5);
  const double kc = solve_critical_momenta(q).at(0);
  const double t1 = critical_times(q, kc, 1).at(0);
  const MomentumGrid grid = make_grid(1100, 0.0);

  std::vector<double> times;
  for (double t = 0.3; t <= 10.0; t += 0.487) {
    bool near_star = false;
    for (int n = 1; n <= 4; ++n)
      if (std::abs(t - (2 * n - 1) * t1) < 0.05) near_star = true;
    if (!near_star) times.push_back(t);
  }
  const RateSeries finite = rate_function(q, grid, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double inf_val = thermo_rate(q, times[i]);
    CHECK(inf_val >= 0.0);
    CHECK(std::abs(finite.lambda[i] - inf_val) < 0.01);
  }
}

TEST_CASE("thermo_rate: long-range quench uses its stored truncation") {
  const QuenchSpec q = make_quench(LongRangeSsh{1.0, 1.5, 0.0, 0.0, 1.0, 10},
                                   LongRangeSsh{1.0, 0.5, 0.0, 0.0, 1.0, 10});
  const double t1 = critical_times(q, solve_critical_momenta(q).at(0), 1).at(0);
  const double val = thermo_rate(q, t1);
  CHECK(std::isfinite(val));
  CHECK(val > 0.0);
}
