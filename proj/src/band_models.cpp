#include "dqpt/band_models.hpp"

#include <cmath>
#include <stdexcept>

#include "dqpt/errors.hpp"

namespace dqpt {

namespace {

constexpr double kGaplessTol = 1e-14;

DVector ssh_d(const Ssh& m, double k) {
  // J1 = 1 energy unit.
  return DVector{1.0 + m.gamma * std::cos(k), -m.gamma * std::sin(k), 0.0, 0.0};
}

DVector creutz_d(const Creutz& m, double k) {
  // J_h = J_d = J = 1; J_v = 2 jv_tilde.
  const double ck = std::cos(k);
  const double sk = std::sin(k);
  return DVector{-2.0 * (ck + m.jv_tilde), 0.0, -2.0 * sk * std::sin(m.theta),
                 -2.0 * ck * std::cos(m.theta)};
}

DVector lrssh_d(const LongRangeSsh& m, double k) {
  double dx = 0.0, dy = 0.0, dz = 0.0, d0 = 0.0;
  for (int r = 1; r <= m.half_range; ++r) {
    const double decay = std::exp(-m.alpha * (r - 1));
    const double v1 = m.j1 * decay;
    const double v2 = m.j2 * decay;
    const double v3 = m.j3 * decay;
    const double v4 = m.j4 * decay;
    dx += v1 * std::cos(k * (r - 1)) + v2 * std::cos(k * r);
    dy += v1 * std::sin(k * (r - 1)) - v2 * std::sin(k * r);
    dz += (v3 - v4) * std::cos(k * r);
    d0 += (v3 + v4) * std::cos(k * r);
  }
  return DVector{dx, dy, dz, d0};
}

DVector qwz_d(const QiWuZhang& m, double kx, double ky) {
  return DVector{std::sin(ky), -std::sin(kx), -std::cos(kx) - std::cos(ky) - m.mu, -2.0 * m.mu};
}

}  // namespace

DVector d_vector(const ModelSpec& model, const Momentum& k) {
  if (!std::isfinite(k.kx) || (k.dims == 2 && !std::isfinite(k.ky)))
    throw std::invalid_argument("d_vector: momentum must be finite");
  if (model_dims(model) != k.dims)
    throw std::invalid_argument("d_vector: momentum dimensionality does not match the model");
  return std::visit(
      [&](const auto& m) -> DVector {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Ssh>) return ssh_d(m, k.kx);
        else if constexpr (std::is_same_v<T, Creutz>) return creutz_d(m, k.kx);
        else if constexpr (std::is_same_v<T, LongRangeSsh>) return lrssh_d(m, k.kx);
        else return qwz_d(m, k.kx, k.ky);
      },
      model);
}

DVector d_vector(const ModelSpec& model, double k) { return d_vector(model, Momentum::one(k)); }

DVector d_vector(const ModelSpec& model, double kx, double ky) {
  return d_vector(model, Momentum::two(kx, ky));
}

double band_energy(const ModelSpec& model, const Momentum& k) {
  return d_vector(model, k).energy();
}

double band_energy(const ModelSpec& model, double k) {
  return band_energy(model, Momentum::one(k));
}

double band_dot(const DVector& di, const DVector& df) {
  return di.x * df.x + di.y * df.y + di.z * df.z;
}

double lambda_from_d(const DVector& di, const DVector& df) {
  const double ei = di.energy();
  const double ef = df.energy();
  if (ei < kGaplessTol || ef < kGaplessTol)
    throw DegenerateModeError("lambda_k: gapless mode (band energy below 1e-14)");
  const double overlap = band_dot(di, df) / (ei * ef);
  const double raw = 1.0 - overlap * overlap;
  // Clamp only against rounding noise near the boundaries; anything beyond a
  // few ulp would be a genuine bug and should surface raw.
  if (raw < 0.0 && raw > -8e-15) return 0.0;
  return raw;
}

double le_from_d(const DVector& di, const DVector& df, double t) {
  const double s = std::sin(df.energy() * t);
  return 1.0 - lambda_from_d(di, df) * s * s;
}

double lambda_k(const QuenchSpec& quench, const Momentum& k) {
  return lambda_from_d(d_vector(quench.initial, k), d_vector(quench.final, k));
}

double lambda_k(const QuenchSpec& quench, double k) { return lambda_k(quench, Momentum::one(k)); }

double le_mode(const QuenchSpec& quench, const Momentum& k, double t) {
  return le_from_d(d_vector(quench.initial, k), d_vector(quench.final, k), t);
}

double le_mode(const QuenchSpec& quench, double k, double t) {
  return le_mode(quench, Momentum::one(k), t);
}

}  // namespace dqpt
