#ifndef ZLSPETS_OSCOUNT_HPP
#define ZLSPETS_OSCOUNT_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "zlspets/reflgrp.hpp"

namespace zlspets {

// Lattice of fixed subgroups C_T(W') in the torus, realised through the
// complex flats of the reflection arrangement. Point counts are exact for
// every admissible (l, a) and never require enumerating T.
struct FixedLattice {
  std::shared_ptr<const ReflGroup> W;
  std::vector<long> flat_dim;                 // by flat id
  std::vector<std::vector<char>> contains;    // contains[i][j]: flat j subset of flat i
  std::vector<std::vector<long>> mobius;      // mu(j, i) for j subset of i, else 0

  static FixedLattice build(std::shared_ptr<const ReflGroup> W);
};

// |C_T(W_flat)| for T = (Z/l^a)^n; checks that the count is the expected
// power of l (internal-consistency error otherwise)
std::uint64_t flat_point_count(const ReflGroup& W, size_t flat, std::uint64_t l, unsigned a);

// number of W-orbits on T with stabiliser conjugate to the given parabolic
// class, by Moebius inclusion-exclusion over the fixed lattice
std::uint64_t os_count(const FixedLattice& L, size_t parabolic_class, std::uint64_t l,
                       unsigned a);

// integer roots b_k with  orbits * |N:W0| = prod_k (l^a - b_k), interpolated
// from counts at sample values of l^a; throws when roots are not integers
std::vector<long> os_roots(const FixedLattice& L, size_t parabolic_class,
                           const std::vector<std::pair<std::uint64_t, unsigned>>& samples);

// ascending admissible prime powers l^a for W (census-independent)
std::vector<std::pair<std::uint64_t, unsigned>> admissible_la_samples(const ReflGroup& W,
                                                                      size_t count,
                                                                      std::uint64_t bound);

}  // namespace zlspets

#endif
