#ifndef ZLSPETS_CHARTAB_HPP
#define ZLSPETS_CHARTAB_HPP

#include <memory>
#include <string>
#include <vector>

#include "zlspets/reflgrp.hpp"

namespace zlspets {

// Exact character table; row order is canonical (degree, then value keys),
// column order follows ReflGroup::classes().
struct CharTable {
  std::shared_ptr<const ReflGroup> W;
  long exponent = 1;
  std::vector<std::vector<Cyc>> rows;
  std::vector<long> degrees;

  size_t num_classes() const { return W->num_classes(); }
  size_t num_chars() const { return rows.size(); }
  Cyc value(size_t chi, size_t elem) const { return rows[chi][W->class_of(elem)]; }

  // both orthogonality relations, degree consistency, sum of squares
  void validate() const;
  // index of the row equal to the given class function, if any
  std::optional<size_t> find_row(const std::vector<Cyc>& values) const;
};

// Dixon-Schneider character table (class-algebra eigenvectors over a prime
// field, lifted to cyclotomics). Results are cached on disk keyed by the
// group fingerprint when a cache directory is available.
CharTable character_table(std::shared_ptr<const ReflGroup> W);

// A subgroup of W wrapped as a group in its own right, with the element
// translation back to W.
struct SubgroupView {
  std::shared_ptr<ReflGroup> group;
  std::vector<size_t> to_parent;  // subgroup element index -> W element index
};

SubgroupView subgroup_view(const std::shared_ptr<const ReflGroup>& W,
                           const std::vector<size_t>& elems);

// multiplicities <phi, chi|_{W0}> for phi in Irr(W0), chi in Irr(W);
// result[phi][chi]
std::vector<std::vector<long>> restriction_multiplicities(const CharTable& big,
                                                          const CharTable& small,
                                                          const std::vector<size_t>& to_parent);

std::string cache_directory();  // empty when caching is disabled

}  // namespace zlspets

#endif
