#pragma once

#include <utility>
#include <vector>

#include "dqpt/ed/fock_basis.hpp"
#include "dqpt/ed/hermitian.hpp"
#include "dqpt/loschmidt.hpp"

namespace dqpt::ed {

/// Interacting SSH quench at half filling with a boundary flux: J2 is the
/// quenched parameter, U >= 0 the nearest-neighbor repulsion, flux in [0, 2pi)
/// attached to the boundary B_L -> A_1 bond.
struct EdQuench {
  int l_cells = 2;
  double u = 0.0;
  double j1 = 1.0;
  double j2_initial = 0.0;
  double j2_final = 0.0;
  double flux = 0.0;
};

void validate(const EdQuench& quench);

/// Many-body Hamiltonian in the given sector. Hopping carries fermionic
/// parity signs (popcount strictly between the two sites in the fixed site
/// ordering); the interaction is diagonal; only the boundary bond sees the
/// flux phase.
HermitianMatrix build_hamiltonian(int l_cells, double j1, double j2, double u, double flux,
                                  const FockBasis& basis);

/// Lowest eigenpair of a full dense decomposition, with the residual contract
/// ||Hv - E0 v||_2 <= 1e-10 * max|H| * dim enforced. Throws
/// DegenerateGroundStateError when the gap to the next level is < 1e-10.
std::pair<double, std::vector<Complex>> ground_state(const HermitianMatrix& hamiltonian);

/// Rate function of the half-filled quench: evolve the prequench ground state
/// with the full postquench spectrum, LE = |sum_n |<n|psi>|^2 e^{-i E_n t}|^2,
/// lambda = -ln(LE)/L_cells.
RateSeries ed_rate_function(const EdQuench& quench, const std::vector<double>& times);

}  // namespace dqpt::ed
