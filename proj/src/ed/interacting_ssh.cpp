#include "dqpt/ed/interacting_ssh.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dqpt/errors.hpp"

namespace dqpt::ed {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int parity_between(std::uint64_t pattern, int a, int b) {
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (hi - lo < 2) return 0;
  const std::uint64_t mask = ((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{1} << (lo + 1)) - 1);
  return std::popcount(pattern & mask) & 1;
}

struct HoppingTerm {
  int dst;
  int src;
  Complex amp;
};

}  // namespace

void validate(const EdQuench& quench) {
  if (quench.l_cells < 2) throw std::invalid_argument("ed: l_cells must be >= 2");
  if (!(quench.u >= 0.0)) throw std::invalid_argument("ed: u must be >= 0");
  if (!(quench.flux >= 0.0) || quench.flux >= kTwoPi)
    throw std::invalid_argument("ed: flux must lie in [0, 2*pi)");
  for (double p : {quench.j1, quench.j2_initial, quench.j2_final})
    if (!std::isfinite(p)) throw std::invalid_argument("ed: hopping amplitudes must be finite");
}

HermitianMatrix build_hamiltonian(int l_cells, double j1, double j2, double u, double flux,
                                  const FockBasis& basis) {
  if (basis.n_sites() != 2 * l_cells)
    throw std::invalid_argument("build_hamiltonian: basis does not match 2*l_cells sites");
  const int n_sites = basis.n_sites();

  std::vector<HoppingTerm> terms;
  for (int j = 0; j < l_cells; ++j)
    terms.push_back({2 * j, 2 * j + 1, Complex{j1, 0.0}});  // J1 c+_{j,A} c_{j,B}
  for (int j = 0; j + 1 < l_cells; ++j)
    terms.push_back({2 * j + 1, 2 * j + 2, Complex{j2, 0.0}});  // J2 c+_{j,B} c_{j+1,A}
  terms.push_back({n_sites - 1, 0, j2 * std::exp(Complex{0.0, -flux})});  // boundary bond

  HermitianMatrix h(basis.dim());
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const std::uint64_t p = basis.state(col);

    double diag = 0.0;
    for (int j = 0; j < l_cells; ++j) {
      const int na = static_cast<int>((p >> (2 * j)) & 1);
      const int nb = static_cast<int>((p >> (2 * j + 1)) & 1);
      const int na_next = static_cast<int>((p >> ((2 * j + 2) % n_sites)) & 1);
      diag += u * (na * nb + nb * na_next);
    }
    h.at(col, col) += Complex{diag, 0.0};

    for (const auto& term : terms) {
      const auto hop = [&](int dst, int src, Complex amp) {
        if (((p >> src) & 1) == 0 || ((p >> dst) & 1) == 1) return;
        const std::uint64_t q = (p & ~(std::uint64_t{1} << src)) | (std::uint64_t{1} << dst);
        const double sign = parity_between(p, dst, src) ? -1.0 : 1.0;
        h.at(basis.index_of(q), col) += sign * amp;
      };
      hop(term.dst, term.src, term.amp);
      hop(term.src, term.dst, std::conj(term.amp));
    }
  }
  return h;
}

std::pair<double, std::vector<Complex>> ground_state(const HermitianMatrix& hamiltonian) {
  const EigenSystem eig = eigh(hamiltonian);
  const std::size_t n = eig.dim;
  if (n >= 2 && eig.values[1] - eig.values[0] < 1e-10) {
    std::ostringstream msg;
    msg << "ground_state: degenerate ground state (gap " << eig.values[1] - eig.values[0]
        << " < 1e-10); perturb the flux by ~1e-8 and retry";
    throw DegenerateGroundStateError(msg.str());
  }
  std::vector<Complex> vec(eig.vector(0), eig.vector(0) + n);

  const auto hv = hamiltonian.apply(vec);
  double residual2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) residual2 += std::norm(hv[i] - eig.values[0] * vec[i]);
  const double bound = 1e-10 * std::max(1.0, hamiltonian.max_abs()) * static_cast<double>(n);
  if (std::sqrt(residual2) > bound)
    throw std::runtime_error("ground_state: eigensolver residual contract violated");

  return {eig.values[0], std::move(vec)};
}

RateSeries ed_rate_function(const EdQuench& quench, const std::vector<double>& times) {
  validate(quench);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw std::invalid_argument("ed_rate_function: times must be >= 0");
    if (i > 0 && times[i] < times[i - 1])
      throw std::invalid_argument("ed_rate_function: times must be ascending");
  }

  const FockBasis basis = FockBasis::half_filling(quench.l_cells);
  const auto h_initial =
      build_hamiltonian(quench.l_cells, quench.j1, quench.j2_initial, quench.u, quench.flux, basis);
  const auto [e0, psi0] = ground_state(h_initial);
  const auto h_final =
      build_hamiltonian(quench.l_cells, quench.j1, quench.j2_final, quench.u, quench.flux, basis);
  const EigenSystem eig = eigh(h_final);

  const std::size_t n = eig.dim;
  std::vector<double> weights(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    Complex overlap{0.0, 0.0};
    const Complex* col = eig.vector(j);
    for (std::size_t i = 0; i < n; ++i) overlap += std::conj(col[i]) * psi0[i];
    weights[j] = std::norm(overlap);
  }

  RateSeries series;
  std::ostringstream meta;
  meta << "issh L=" << quench.l_cells << " U=" << quench.u << " J1=" << quench.j1
       << " J2 " << quench.j2_initial << " -> " << quench.j2_final << " flux=" << quench.flux;
  series.metadata.emplace_back("quench", meta.str());
  series.metadata.emplace_back("grid", "ed half filling");
  series.times = times;
  series.lambda.reserve(times.size());
  series.le.reserve(times.size());
  for (double t : times) {
    Complex amp{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = -eig.values[j] * t;
      amp += weights[j] * Complex{std::cos(phase), std::sin(phase)};
    }
    const double le = std::norm(amp);
    if (le <= 1e-300) {
      series.lambda.push_back(std::numeric_limits<double>::infinity());
      series.le.push_back(0.0);
    } else {
      series.lambda.push_back(-std::log(le) / quench.l_cells);
      series.le.push_back(le);
    }
  }
  return series;
}

}  // namespace dqpt::ed
