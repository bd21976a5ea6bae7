#include "dqpt/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dqpt {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

int model_dims(const ModelSpec& model) {
  return std::holds_alternative<QiWuZhang>(model) ? 2 : 1;
}

std::string model_name(const ModelSpec& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Ssh>) return "ssh";
        else if constexpr (std::is_same_v<T, Creutz>) return "creutz";
        else if constexpr (std::is_same_v<T, LongRangeSsh>) return "lrssh";
        else return "qwz";
      },
      model);
}

void validate_model(const ModelSpec& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Ssh>) {
          if (!finite(m.gamma)) throw std::invalid_argument("ssh: gamma must be finite");
        } else if constexpr (std::is_same_v<T, Creutz>) {
          if (!finite(m.theta) || std::abs(m.theta) > kHalfPi)
            throw std::invalid_argument("creutz: theta must lie in [-pi/2, pi/2]");
          if (!finite(m.jv_tilde) || m.jv_tilde < 0.0 || m.jv_tilde >= 1.0)
            throw std::invalid_argument("creutz: jv_tilde must lie in [0, 1)");
        } else if constexpr (std::is_same_v<T, LongRangeSsh>) {
          if (!finite(m.j1) || !finite(m.j2) || !finite(m.j3) || !finite(m.j4))
            throw std::invalid_argument("lrssh: hopping amplitudes must be finite");
          if (!finite(m.alpha) || m.alpha <= 0.0)
            throw std::invalid_argument("lrssh: alpha must be positive");
          if (m.half_range < 1)
            throw std::invalid_argument("lrssh: half_range must be a positive integer");
        } else {
          if (!finite(m.mu)) throw std::invalid_argument("qwz: mu must be finite");
        }
      },
      model);
}

void validate_quench(const QuenchSpec& quench) {
  validate_model(quench.initial);
  validate_model(quench.final);
  if (quench.initial.index() != quench.final.index())
    throw std::invalid_argument("quench: initial and final models must be the same variant");

  if (const auto* ci = std::get_if<Creutz>(&quench.initial)) {
    const auto& cf = std::get<Creutz>(quench.final);
    if (ci->jv_tilde != cf.jv_tilde)
      throw std::invalid_argument("quench: creutz jv_tilde is a fixed parameter");
  } else if (const auto* li = std::get_if<LongRangeSsh>(&quench.initial)) {
    const auto& lf = std::get<LongRangeSsh>(quench.final);
    if (li->j1 != lf.j1 || li->j3 != lf.j3 || li->j4 != lf.j4)
      throw std::invalid_argument("quench: lrssh j1/j3/j4 are fixed parameters");
    if (li->alpha != lf.alpha || li->half_range != lf.half_range)
      throw std::invalid_argument("quench: lrssh alpha and half_range are fixed parameters");
  }
}

QuenchSpec make_quench(ModelSpec initial, ModelSpec final) {
  QuenchSpec q{std::move(initial), std::move(final)};
  validate_quench(q);
  return q;
}

double driving_initial(const QuenchSpec& quench) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Ssh>) return m.gamma;
        else if constexpr (std::is_same_v<T, Creutz>) return m.theta;
        else if constexpr (std::is_same_v<T, LongRangeSsh>) return m.j2;
        else return m.mu;
      },
      quench.initial);
}

double driving_final(const QuenchSpec& quench) {
  QuenchSpec swapped{quench.final, quench.initial};
  return driving_initial(swapped);
}

std::string describe_quench(const QuenchSpec& quench) {
  std::ostringstream out;
  out << model_name(quench.initial) << " ";
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Creutz>) out << "jv_tilde=" << m.jv_tilde << " ";
        else if constexpr (std::is_same_v<T, LongRangeSsh>)
          out << "j1=" << m.j1 << " j3=" << m.j3 << " j4=" << m.j4 << " alpha=" << m.alpha
              << " half_range=" << m.half_range << " ";
      },
      quench.initial);
  out << driving_initial(quench) << " -> " << driving_final(quench);
  return out.str();
}

}  // namespace dqpt
