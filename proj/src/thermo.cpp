#include "dqpt/thermo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "dqpt/band_models.hpp"
#include "dqpt/critical.hpp"
#include "dqpt/errors.hpp"

namespace dqpt {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kMaxLevels = 30;
constexpr double kTargetTol = 1e-8;

struct GaussNode {
  double x;
  double w;
};

// 15-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<GaussNode, 15> kGauss15 = {{
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {+0.00000000000000000e+00, 2.02578241925560898e-01},
    {+2.01194093997434514e-01, 1.98431485327111246e-01},
    {+3.94151347077563385e-01, 1.86161000015561878e-01},
    {+5.70972172608538830e-01, 1.66269205816993781e-01},
    {+7.24417731360170070e-01, 1.39570677926153908e-01},
    {+8.48206583410427206e-01, 1.07159220467171773e-01},
    {+9.37273392400705951e-01, 7.03660474881080689e-02},
    {+9.87992518020485377e-01, 3.07532419961186465e-02},
}};

using Integrand = std::function<double(double)>;

double gauss_panel(const Integrand& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (const auto& node : kGauss15) sum += node.w * f(mid + half * node.x);
  return half * sum;
}

// Bisect until whole-vs-halves agree; the integrand's log singularities sit
// on panel endpoints, which the open Gauss nodes never touch.
double adaptive_panel(const Integrand& f, double a, double b, double tol, int level,
                      bool& converged) {
  const double whole = gauss_panel(f, a, b);
  const double mid = 0.5 * (a + b);
  const double split = gauss_panel(f, a, mid) + gauss_panel(f, mid, b);
  if (std::abs(whole - split) < tol) return split;
  if (level >= kMaxLevels) {
    converged = false;
    return split;
  }
  return adaptive_panel(f, a, mid, 0.5 * tol, level + 1, converged) +
         adaptive_panel(f, mid, b, 0.5 * tol, level + 1, converged);
}

bool lambda_even_in_k(const QuenchSpec& quench) {
  for (double k : {0.37, 1.12, 2.41}) {
    const double a = lambda_k(quench, k);
    const double b = lambda_k(quench, kTwoPi - k);
    const double ea = band_energy(quench.final, k);
    const double eb = band_energy(quench.final, kTwoPi - k);
    if (std::abs(a - b) > 1e-10 || std::abs(ea - eb) > 1e-10) return false;
  }
  return true;
}

}  // namespace

double thermo_rate(const QuenchSpec& quench, double t, int base_subdivisions) {
  validate_quench(quench);
  if (model_dims(quench.initial) != 1)
    throw std::invalid_argument("thermo_rate: 1D quench required");
  if (!(t >= 0.0)) throw std::invalid_argument("thermo_rate: t must be >= 0");
  if (base_subdivisions < 1)
    throw std::invalid_argument("thermo_rate: base_subdivisions must be >= 1");
  if (t == 0.0) return 0.0;

  std::vector<double> splits;
  try {
    splits = solve_critical_momenta(quench);
  } catch (const std::invalid_argument&) {
    splits.clear();
  }

  const bool even = lambda_even_in_k(quench);
  const double hi = even ? kPi : kTwoPi;
  std::vector<double> points{0.0};
  for (double kc : splits) {
    if (kc > 0.0 && kc < hi) points.push_back(kc);
    if (!even) {
      const double mirror = kTwoPi - kc;
      if (mirror > 0.0 && mirror < hi) points.push_back(mirror);
    }
  }
  points.push_back(hi);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  if (base_subdivisions > 1) {
    std::vector<double> refined;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      for (int j = 0; j < base_subdivisions; ++j)
        refined.push_back(points[i] + (points[i + 1] - points[i]) * j / base_subdivisions);
    refined.push_back(points.back());
    points = std::move(refined);
  }

  const Integrand f = [&](double k) { return std::log(le_mode(quench, k, t)); };

  double total = 0.0;
  bool converged = true;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double width = points[i + 1] - points[i];
    const double tol = kTargetTol * (width / hi);
    total += adaptive_panel(f, points[i], points[i + 1], tol, 0, converged);
  }

  const double lambda = even ? -2.0 * total / kTwoPi : -total / kTwoPi;

  if (!converged)
    throw AccuracyError("thermo_rate: quadrature did not converge within 30 levels", lambda);
  return lambda;
}

RateSeries thermo_series(const QuenchSpec& quench, const std::vector<double>& times) {
  RateSeries series;
  series.metadata.emplace_back("quench", describe_quench(quench));
  series.metadata.emplace_back("grid", "thermodynamic limit");
  series.times = times;
  series.lambda.reserve(times.size());
  for (double t : times) series.lambda.push_back(thermo_rate(quench, t));
  return series;
}

}  // namespace dqpt
