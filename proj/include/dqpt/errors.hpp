#pragma once

#include <stdexcept>
#include <string>

namespace dqpt {

/// A Bloch mode with (near-)vanishing band energy: the pre/postquench spinor
/// at this momentum is ill-defined, so per-mode quantities refuse to evaluate.
class DegenerateModeError : public std::runtime_error {
public:
  explicit DegenerateModeError(const std::string& what) : std::runtime_error(what) {}
};

/// Ground state separated from the first excited state by less than the
/// degeneracy tolerance. Callers may perturb the flux by ~1e-8 and retry.
class DegenerateGroundStateError : public std::runtime_error {
public:
  explicit DegenerateGroundStateError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature failed to reach the requested tolerance; carries the best
/// estimate obtained before giving up.
class AccuracyError : public std::runtime_error {
public:
  AccuracyError(const std::string& what, double best)
      : std::runtime_error(what), best_estimate(best) {}
  double best_estimate;
};

}  // namespace dqpt
