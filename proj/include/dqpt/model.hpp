#pragma once

#include <cmath>
#include <string>
#include <variant>

namespace dqpt {

/// Pauli decomposition of a two-band Bloch Hamiltonian at one momentum:
/// h(k) = x sigma_x + y sigma_y + z sigma_z + d0 * Identity.
struct DVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double d0 = 0.0;

  /// Band energy sqrt(x^2 + y^2 + z^2); the identity part d0 is a pure phase
  /// and never enters moduli.
  double energy() const { return std::sqrt(x * x + y * y + z * z); }
};

/// A momentum point: scalar k for chains, (kx, ky) for the 2D model.
struct Momentum {
  double kx = 0.0;
  double ky = 0.0;
  int dims = 1;

  static Momentum one(double k) { return Momentum{k, 0.0, 1}; }
  static Momentum two(double kx, double ky) { return Momentum{kx, ky, 2}; }
};

/// SSH chain; gamma = J2/J1 with J1 = 1 fixed as the energy unit.
struct Ssh {
  double gamma = 0.0;
};

/// Creutz ladder restricted to J_h = J_d = J = 1 (energy unit);
/// theta in [-pi/2, pi/2] is the flux per plaquette, jv_tilde = J_v/2J in [0, 1).
struct Creutz {
  double theta = 0.0;
  double jv_tilde = 0.0;
};

/// SSH chain with exponentially decaying long-range hopping
/// V_{n,r} = J_n exp(-alpha (r-1)), sums truncated at r = half_range = L/2.
struct LongRangeSsh {
  double j1 = 1.0;
  double j2 = 0.0;
  double j3 = 0.0;
  double j4 = 0.0;
  double alpha = 1.0;
  int half_range = 1;
};

/// Qi-Wu-Zhang model on the square lattice; mu is the chemical potential.
struct QiWuZhang {
  double mu = 0.0;
};

using ModelSpec = std::variant<Ssh, Creutz, LongRangeSsh, QiWuZhang>;

int model_dims(const ModelSpec& model);
std::string model_name(const ModelSpec& model);

/// Throws std::invalid_argument when a parameter violates its domain
/// (Creutz |theta| <= pi/2 and 0 <= jv_tilde < 1, LongRangeSsh alpha > 0, ...).
void validate_model(const ModelSpec& model);

/// Sudden quench of the driving parameter: same model variant, same fixed
/// parameters, only the driving parameter (gamma / theta / j2 / mu) differs.
struct QuenchSpec {
  ModelSpec initial;
  ModelSpec final;
};

void validate_quench(const QuenchSpec& quench);
QuenchSpec make_quench(ModelSpec initial, ModelSpec final);

double driving_initial(const QuenchSpec& quench);
double driving_final(const QuenchSpec& quench);
std::string describe_quench(const QuenchSpec& quench);

}  // namespace dqpt
