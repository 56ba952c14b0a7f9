#pragma once

#include <vector>

#include "ultrahom/finite_group.hpp"
#include "ultrahom/perm_group.hpp"

namespace ultrahom {

/// One representative of every isomorphism class of groups of order at
/// most `max_order` (max_order <= 24), each named, ordered by order.
std::vector<FiniteGroup> small_group_corpus(std::size_t max_order = 24);

/// A named permutation group.
struct NamedPermGroup {
  std::string name;
  PermGroup group;
};

/// Permutation groups of order at most 5000: symmetric and alternating
/// groups, dihedral and cyclic actions, a few transitive groups of prime
/// degree, intransitive products, and the regular images of the small
/// corpus.
std::vector<NamedPermGroup> permutation_corpus();

/// Dihedral group of order 2n as a FiniteGroup.
FiniteGroup dihedral(std::size_t n);
/// Dicyclic group of order 4n (n = 2 gives Q8).
FiniteGroup dicyclic(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);

}  // namespace ultrahom
