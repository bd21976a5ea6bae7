#include "dqpt/ed/fock_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dqpt::ed {

std::size_t binomial_capped(int n, int k, std::size_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result fits in 64 bits comfortably while <= cap; saturate beyond.
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

FockBasis FockBasis::build(int l_cells, int n_particles, std::size_t dim_cap) {
  if (l_cells < 1) throw std::invalid_argument("FockBasis: l_cells must be >= 1");
  const int n_sites = 2 * l_cells;
  if (n_sites > 62) throw std::invalid_argument("FockBasis: more than 62 sites unsupported");
  if (n_particles < 0 || n_particles > n_sites)
    throw std::invalid_argument("FockBasis: n_particles out of range");
  const std::size_t dim = binomial_capped(n_sites, n_particles, dim_cap);
  if (dim > dim_cap)
    throw std::invalid_argument("FockBasis: dimension exceeds the cap of " +
                                std::to_string(dim_cap));

  std::vector<std::uint64_t> states;
  states.reserve(dim);
  if (n_particles == 0) {
    states.push_back(0);
  } else {
    // Gosper's hack walks same-popcount patterns in increasing order.
    std::uint64_t v = (std::uint64_t{1} << n_particles) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n_sites;
    while (v < limit) {
      states.push_back(v);
      const std::uint64_t c = v & (~v + 1);
      const std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
      if (c == 0) break;
    }
  }
  return FockBasis(n_sites, n_particles, std::move(states));
}

FockBasis FockBasis::half_filling(int l_cells, std::size_t dim_cap) {
  return build(l_cells, l_cells, dim_cap);
}

std::size_t FockBasis::index_of(std::uint64_t pattern) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), pattern);
  if (it == states_.end() || *it != pattern)
    throw std::out_of_range("FockBasis: pattern outside this particle-number sector");
  return static_cast<std::size_t>(it - states_.begin());
}

}  // namespace dqpt::ed
