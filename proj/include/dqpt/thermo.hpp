#pragma once

#include <vector>

#include "dqpt/loschmidt.hpp"
#include "dqpt/model.hpp"

namespace dqpt {

/// Thermodynamic-limit rate function
///   lambda(t) = -(1/2pi) integral_0^{2pi} ln[1 - Lambda_k sin^2(eps_f(k) t)] dk
/// by composite adaptive Gauss-Legendre quadrature, pre-split at the critical
/// momenta where the integrand is log-singular at the critical times.
/// `base_subdivisions` pre-splits every segment (used by the stability check).
/// Throws AccuracyError (carrying the best estimate) if 30 refinement levels
/// do not reach 1e-8 absolute.
double thermo_rate(const QuenchSpec& quench, double t, int base_subdivisions = 1);

/// Elementwise thermo_rate over a time list.
RateSeries thermo_series(const QuenchSpec& quench, const std::vector<double>& times);

}  // namespace dqpt
