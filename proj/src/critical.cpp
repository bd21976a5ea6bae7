#include "dqpt/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dqpt/band_models.hpp"
#include "dqpt/errors.hpp"

namespace dqpt {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kBoundaryTol = 1e-12;

double positive_mod_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

std::vector<double> ssh_momenta(const Ssh& mi, const Ssh& mf) {
  const double gi = mi.gamma, gf = mf.gamma;
  const double den = gi + gf;
  if (std::abs(den) < 1e-12)
    throw std::invalid_argument(
        "solve_critical_momenta: ssh quench with gamma_f = -gamma_i has a degenerate "
        "constraint (division by gamma_i + gamma_f)");
  const double arg = -(1.0 + gi * gf) / den;
  if (std::abs(arg) >= 1.0 - kBoundaryTol) return {};
  return {std::acos(arg)};
}

std::vector<double> creutz_momenta(const Creutz& mi, const Creutz& mf) {
  const double a = std::sin(mi.theta) * std::sin(mf.theta);
  const double jv = mi.jv_tilde;
  const double disc = a * (jv * jv - 1.0 + a);
  if (disc < 0.0) return {};
  const double den = 1.0 - a;
  if (std::abs(den) < 1e-12) return {};
  const double root = std::sqrt(disc);
  std::vector<double> ks;
  for (double c : {(-jv + root) / den, (-jv - root) / den}) {
    if (std::abs(c) >= 1.0 - kBoundaryTol) continue;
    ks.push_back(std::acos(c));
  }
  std::sort(ks.begin(), ks.end());
  if (ks.size() == 2 && ks[1] - ks[0] < 1e-10) ks.pop_back();
  return ks;
}

double qwz_partner_cos(double mui, double muf, double cos_enum, bool& valid) {
  const double den = mui + muf + 2.0 * cos_enum;
  if (std::abs(den) < 1e-12) {
    valid = false;
    return 0.0;
  }
  valid = true;
  return -(mui * muf + (mui + muf) * cos_enum + 2.0) / den;
}

}  // namespace

int CriticalSet::total_momentum_count() const {
  int n = 0;
  for (const auto& p : pairs) n += p.multiplicity;
  return n;
}

double constraint_residual(const QuenchSpec& quench, const Momentum& k) {
  return band_dot(d_vector(quench.initial, k), d_vector(quench.final, k));
}

double constraint_residual(const QuenchSpec& quench, double k) {
  return constraint_residual(quench, Momentum::one(k));
}

std::vector<double> scan_constraint_roots(const QuenchSpec& quench, int panels) {
  if (model_dims(quench.initial) != 1)
    throw std::invalid_argument("scan_constraint_roots: 1D quench required");
  if (panels < 2) throw std::invalid_argument("scan_constraint_roots: need at least 2 panels");
  std::vector<double> roots;
  auto f = [&](double k) { return constraint_residual(quench, k); };
  double prev_k = 0.0;
  double prev_f = f(prev_k);
  for (int i = 1; i <= panels; ++i) {
    const double k = kPi * i / panels;
    const double fk = f(k);
    if (prev_f == 0.0 && prev_k > 0.0) {
      roots.push_back(prev_k);
    } else if (prev_f * fk < 0.0) {
      double a = prev_k, b = k, fa = prev_f;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if (fa * fm < 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_k = k;
    prev_f = fk;
  }
  // Merge near-duplicates from roots landing on panel boundaries.
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-10) out.push_back(r);
  return out;
}

std::vector<double> solve_critical_momenta(const QuenchSpec& quench) {
  validate_quench(quench);
  if (model_dims(quench.initial) != 1)
    throw std::invalid_argument(
        "solve_critical_momenta: 1D quench required; use qwz_critical_pairs for the 2D model");
  if (const auto* si = std::get_if<Ssh>(&quench.initial))
    return ssh_momenta(*si, std::get<Ssh>(quench.final));
  if (const auto* ci = std::get_if<Creutz>(&quench.initial))
    return creutz_momenta(*ci, std::get<Creutz>(quench.final));
  return scan_constraint_roots(quench);
}

double critical_flux(double k_c, int size) {
  if (size < 2) throw std::invalid_argument("critical_flux: size must be >= 2");
  if (!(k_c >= 0.0 && k_c <= kPi + 1e-12))
    throw std::invalid_argument("critical_flux: k_c must lie in [0, pi]");
  const double plus = positive_mod_2pi(size * k_c);
  if (plus == 0.0) return 0.0;
  const double minus = kTwoPi - plus;
  return std::min(plus, minus);
}

std::vector<double> critical_times(const QuenchSpec& quench, const Momentum& k_c, int n_max) {
  if (n_max < 1) throw std::invalid_argument("critical_times: n_max must be >= 1");
  const double ef = band_energy(quench.final, k_c);
  if (ef < 1e-14)
    throw DegenerateModeError("critical_times: postquench band is gapless at k_c");
  std::vector<double> ts;
  ts.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) ts.push_back(kPi * (2 * n - 1) / (2.0 * ef));
  return ts;
}

std::vector<double> critical_times(const QuenchSpec& quench, double k_c, int n_max) {
  return critical_times(quench, Momentum::one(k_c), n_max);
}

double asymptotic_le(const QuenchSpec& quench, double k_c, double t_star, int size,
                     double delta) {
  if (std::abs(delta) >= 0.1)
    throw std::invalid_argument("asymptotic_le: |delta| must be < 0.1 (small-detuning expansion)");
  if (size < 2) throw std::invalid_argument("asymptotic_le: size must be >= 2");
  const double l2 = static_cast<double>(size) * size;
  if (const auto* si = std::get_if<Ssh>(&quench.initial)) {
    const double gi = si->gamma;
    const double gf = std::get<Ssh>(quench.final).gamma;
    const double num =
        std::pow(gi + gf, 3) + gf * gf * t_star * t_star * (gf - gi) * (1.0 - gi * gi);
    const double den = (gf - gi) * (gf - gi) * (gf + gi) * l2;
    return num / den * delta * delta;
  }
  if (const auto* ci = std::get_if<Creutz>(&quench.initial)) {
    const double si_ = std::sin(ci->theta);
    const auto& mf = std::get<Creutz>(quench.final);
    const double sf = std::sin(mf.theta);
    const double jv = ci->jv_tilde;
    const double sk = std::sin(k_c);
    const double c_term =
        sf * (jv * jv - 1.0 + si_ * sf) / (sk * sk * (sf - si_));
    const double cf = std::cos(mf.theta);
    const double b_num =
        4.0 * (t_star * t_star * std::pow(jv + std::cos(k_c) * cf * cf, 2) - c_term);
    const double b = b_num / ((sf - si_) * sf * l2);
    return b * delta * delta;
  }
  throw std::invalid_argument("asymptotic_le: closed form available for ssh and creutz only");
}

CriticalSet qwz_critical_pairs(const QuenchSpec& quench, int size_x, int size_y, TwistAxis axis,
                               int n_max, int both_samples) {
  validate_quench(quench);
  const auto* qi = std::get_if<QiWuZhang>(&quench.initial);
  if (qi == nullptr)
    throw std::invalid_argument("qwz_critical_pairs: quench must be of the 2D model");
  if (size_x < 2 || size_y < 2)
    throw std::invalid_argument("qwz_critical_pairs: sizes must be >= 2");
  const double mui = qi->mu;
  const double muf = std::get<QiWuZhang>(quench.final).mu;

  CriticalSet set;

  const double lo_arg = muf * (muf - 2.0) * (muf - mui) / (mui + muf - 2.0);
  const double hi_arg = muf * (muf + 2.0) * (muf - mui) / (mui + muf + 2.0);
  if (std::abs(mui + muf - 2.0) > 1e-12 && std::abs(mui + muf + 2.0) > 1e-12 && lo_arg > 0.0 &&
      hi_arg > 0.0) {
    const double a = kPi / (2.0 * std::sqrt(lo_arg));
    const double b = kPi / (2.0 * std::sqrt(hi_arg));
    set.t1_interval = TStarInterval{std::min(a, b), std::max(a, b)};
  }

  auto add_pair = [&](Momentum kc, double solved, int twisted_size, int mult,
                      std::optional<double> second_flux) {
    CriticalPair pair;
    pair.k_c = kc;
    pair.eps_f = band_energy(quench.final, kc);
    if (pair.eps_f < 1e-14) return;  // gapless pair carries no finite critical time
    pair.phi_c = critical_flux(solved, twisted_size);
    pair.phi_c_y = second_flux;
    pair.t_star = critical_times(quench, kc, n_max);
    pair.multiplicity = mult;
    set.pairs.push_back(pair);
  };

  auto enumerate_axis = [&](bool twist_x) {
    const int n_enum = twist_x ? size_y : size_x;
    const int twisted_size = twist_x ? size_x : size_y;
    const int m_lo = (n_enum % 2 == 0) ? -n_enum / 2 : -(n_enum - 1) / 2;
    for (int i = 0; i < n_enum; ++i) {
      const double k_enum = kTwoPi * (m_lo + i) / n_enum;
      bool valid = false;
      const double c = qwz_partner_cos(mui, muf, std::cos(k_enum), valid);
      if (!valid || std::abs(c) > 1.0) continue;
      const double k_solved = clamped_acos(c);
      const bool endpoint = k_solved < kBoundaryTol || kPi - k_solved < kBoundaryTol;
      const Momentum kc = twist_x ? Momentum::two(k_solved, k_enum)
                                  : Momentum::two(k_enum, k_solved);
      add_pair(kc, k_solved, twisted_size, endpoint ? 1 : 2, std::nullopt);
    }
  };

  if (axis == TwistAxis::x || axis == TwistAxis::both) {
    if (axis == TwistAxis::both) {
      // Dual twist: sample the admissible cos(kx) continuum; admissibility is
      // checked directly through |cos(ky)| <= 1 rather than via the
      // closed-form interval so that any cross-phase regime works.
      for (int i = 0; i < both_samples; ++i) {
        const double cx = -1.0 + 2.0 * (i + 0.5) / both_samples;
        bool valid = false;
        const double cy = qwz_partner_cos(mui, muf, cx, valid);
        if (!valid || std::abs(cy) > 1.0) continue;
        const double kx = clamped_acos(cx);
        const double ky = clamped_acos(cy);
        add_pair(Momentum::two(kx, ky), kx, size_x, 4, critical_flux(ky, size_y));
      }
    } else {
      enumerate_axis(true);
    }
  }
  if (axis == TwistAxis::y) enumerate_axis(false);

  return set;
}

CriticalSet solve_critical_set(const QuenchSpec& quench, int size, int n_max) {
  if (model_dims(quench.initial) == 2)
    return qwz_critical_pairs(quench, size, size, TwistAxis::x, n_max);
  CriticalSet set;
  for (double kc : solve_critical_momenta(quench)) {
    CriticalPair pair;
    pair.k_c = Momentum::one(kc);
    pair.eps_f = band_energy(quench.final, kc);
    if (pair.eps_f < 1e-14) continue;
    pair.phi_c = critical_flux(kc, size);
    pair.t_star = critical_times(quench, kc, n_max);
    pair.multiplicity = 2;
    set.pairs.push_back(pair);
  }
  return set;
}

}  // namespace dqpt
