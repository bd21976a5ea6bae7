#pragma once

#include "dqpt/model.hpp"

namespace dqpt {

/// Bloch vector of a model at momentum k. Passing a scalar momentum to the 2D
/// model (or a pair to a chain) throws std::invalid_argument.
DVector d_vector(const ModelSpec& model, const Momentum& k);
DVector d_vector(const ModelSpec& model, double k);
DVector d_vector(const ModelSpec& model, double kx, double ky);

/// Band energy sqrt(dx^2 + dy^2 + dz^2) >= 0; d0 excluded.
double band_energy(const ModelSpec& model, const Momentum& k);
double band_energy(const ModelSpec& model, double k);

/// Sum over alpha = x, y, z of di_alpha * df_alpha (d0 excluded).
double band_dot(const DVector& di, const DVector& df);

// Raw d-vector entry points; the model wrappers below delegate here and tests
// use them directly (e.g. to probe d0-invariance with perturbed offsets).
double lambda_from_d(const DVector& di, const DVector& df);
double le_from_d(const DVector& di, const DVector& df, double t);

/// Per-mode oscillation amplitude Lambda_k in [0, 1]; throws
/// DegenerateModeError when either band energy vanishes within 1e-14.
double lambda_k(const QuenchSpec& quench, const Momentum& k);
double lambda_k(const QuenchSpec& quench, double k);

/// Per-mode Loschmidt echo L_k(t) = 1 - Lambda_k sin^2(eps_f(k) t).
double le_mode(const QuenchSpec& quench, const Momentum& k, double t);
double le_mode(const QuenchSpec& quench, double k, double t);

}  // namespace dqpt
