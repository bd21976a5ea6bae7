#pragma once

#include <cstdint>
#include <vector>

namespace dqpt::ed {

/// Occupation-number basis of spinless fermions with fixed particle count.
/// Site ordering over L unit cells: bit 2(j-1) = sublattice A of cell j,
/// bit 2(j-1)+1 = sublattice B. Patterns are stored strictly increasing.
class FockBasis {
 public:
  static FockBasis build(int l_cells, int n_particles, std::size_t dim_cap = 20000);
  static FockBasis half_filling(int l_cells, std::size_t dim_cap = 20000);

  int n_sites() const { return n_sites_; }
  int n_particles() const { return n_particles_; }
  std::size_t dim() const { return states_.size(); }
  std::uint64_t state(std::size_t i) const { return states_[i]; }
  const std::vector<std::uint64_t>& states() const { return states_; }

  /// Ordinal of a pattern; throws std::out_of_range for patterns outside the
  /// particle-number sector.
  std::size_t index_of(std::uint64_t pattern) const;

 private:
  FockBasis(int n_sites, int n_particles, std::vector<std::uint64_t> states)
      : n_sites_(n_sites), n_particles_(n_particles), states_(std::move(states)) {}

  int n_sites_ = 0;
  int n_particles_ = 0;
  std::vector<std::uint64_t> states_;
};

/// Exact binomial coefficient, saturating at cap+1 to keep the overflow check
/// cheap.
std::size_t binomial_capped(int n, int k, std::size_t cap);

}  // namespace dqpt::ed
