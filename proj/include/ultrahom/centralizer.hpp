#pragma once

#include <optional>
#include <vector>

#include "ultrahom/perm_group.hpp"

namespace ultrahom {

/// C_G(S) = {g in G : gs = sg for all s in S}, by backtrack search over
/// the stabilizer chain of G. Throws PreconditionError if some s is not in G.
PermGroup centralizer(const PermGroup& G, const std::vector<Perm>& S);

/// Same subgroup, found by testing every element of G. Throws CapExceeded
/// when |G| > cap.
PermGroup centralizer_by_enumeration(const PermGroup& G, const std::vector<Perm>& S,
                                     std::size_t cap);

/// C_G(C_G(S)).
PermGroup double_centralizer(const PermGroup& G, const std::vector<Perm>& S);

/// N_G(H) by enumeration of G.
PermGroup normalizer(const PermGroup& G, const PermGroup& H, std::size_t cap);

/// Some g in G with a^g = b. In a full symmetric group the witness comes from
/// matching cycles; otherwise the first element of G (chain order) that
/// works. Throws CapExceeded for a non-symmetric G larger than cap.
std::optional<Perm> conjugacy_witness(const PermGroup& G, const Perm& a, const Perm& b,
                                      std::size_t cap);

/// The cycle-matching conjugator in Sym(n): w with a^w = b, or nullopt if
/// the cycle types differ. Cycles of each permutation (fixed points
/// included) are sorted by length, ties by smallest point, and w sends the
/// i-th cycle of b onto the i-th cycle of a.
std::optional<Perm> symmetric_conjugator(const Perm& a, const Perm& b);

/// A short generating list for the group whose elements are `elements`
/// (assumed closed under multiplication): greedily adds the first element
/// not yet generated.
std::vector<Perm> greedy_generators(std::size_t degree, const std::vector<Perm>& elements);

/// True if the two groups have the same elements.
bool same_group(const PermGroup& a, const PermGroup& b);

}  // namespace ultrahom
