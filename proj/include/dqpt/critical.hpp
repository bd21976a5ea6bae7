#pragma once

#include <optional>
#include <vector>

#include "dqpt/model.hpp"

namespace dqpt {

/// One solved critical-momentum family. For chains k_c is the positive
/// representative of the +/- pair; multiplicity counts the signed momenta the
/// entry stands for. eps_f is the postquench band energy at k_c, phi_c the
/// flux that places the pair on the L-site grid, t_star the times
/// pi (2n-1) / (2 eps_f), n = 1..n_max.
struct CriticalPair {
  Momentum k_c;
  double eps_f = 0.0;
  double phi_c = 0.0;
  std::optional<double> phi_c_y;  // second-axis flux, dual-twist 2D mode only
  std::vector<double> t_star;
  int multiplicity = 2;
};

struct TStarInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct CriticalSet {
  std::vector<CriticalPair> pairs;
  std::optional<TStarInterval> t1_interval;  // 2D chemical-potential band only

  int total_momentum_count() const;
  bool empty() const { return pairs.empty(); }
};

/// Sum over alpha = x,y,z of d_alpha(initial, k) d_alpha(final, k); the
/// orthogonality constraint is residual = 0.
double constraint_residual(const QuenchSpec& quench, const Momentum& k);
double constraint_residual(const QuenchSpec& quench, double k);

/// Positive-representative critical momenta in (0, pi) for a 1D quench.
/// SSH and Creutz use the closed forms; the long-range chain is solved by a
/// uniform scan (>= `panels` sign checks) plus bisection to 1e-12.
/// Same-phase quenches yield an empty list. 2D models are rejected
/// (use qwz_critical_pairs).
std::vector<double> solve_critical_momenta(const QuenchSpec& quench);

/// Numeric root scan of the constraint on (0, pi); also usable as the
/// independent cross-check of the closed forms.
std::vector<double> scan_constraint_roots(const QuenchSpec& quench, int panels = 2048);

/// Flux in [0, pi] placing +k_c or -k_c on the size-L grid:
/// min of mod(L k_c, 2 pi) and mod(-L k_c, 2 pi). Exactly pi on a tie.
double critical_flux(double k_c, int size);

std::vector<double> critical_times(const QuenchSpec& quench, const Momentum& k_c, int n_max);
std::vector<double> critical_times(const QuenchSpec& quench, double k_c, int n_max);

/// Closed-form small-detuning prediction of the near-critical mode echo
/// L_{k*}(t_star) ~ C Delta^2, available for SSH and Creutz.
double asymptotic_le(const QuenchSpec& quench, double k_c, double t_star, int size, double delta);

enum class TwistAxis { x, y, both };

/// Critical pairs of the 2D model. Single-axis mode enumerates the untwisted
/// axis over its PBC grid and solves the constraint for the other component;
/// `both` samples the admissible continuum and reports per-axis fluxes.
CriticalSet qwz_critical_pairs(const QuenchSpec& quench, int size_x, int size_y, TwistAxis axis,
                               int n_max = 2, int both_samples = 128);

/// Full 1D assembly: momenta, fluxes, energies, critical times.
CriticalSet solve_critical_set(const QuenchSpec& quench, int size, int n_max);

}  // namespace dqpt
