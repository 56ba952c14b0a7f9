#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ultrahom/error.hpp"
#include "ultrahom/finite_group.hpp"

namespace ultrahom {

inline constexpr Elem kNoImage = std::numeric_limits<Elem>::max();

/// A homomorphism given as a total map on element indices.
struct GroupHomomorphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_injective() const;
  /// Exhaustive check of f(ab) = f(a) f(b).
  bool is_homomorphism() const;

  /// Extends generator images along the Cayley graph of `source`; throws
  /// InputError if the extension is not well defined.
  static GroupHomomorphism from_generator_images(const FiniteGroup& source,
                                                 const FiniteGroup& target,
                                                 const std::vector<Elem>& gens,
                                                 const std::vector<Elem>& images);
};

/// The subgroup H (a sorted element list of G, starting with the identity)
/// as a group of its own, element i being H[i], with its inclusion into G.
GroupHomomorphism subgroup_inclusion(const FiniteGroup& G, const std::vector<Elem>& H, std::string name = {});

/// A finite pairing a_i -> b_i in one group, validated to extend to an
/// isomorphism ⟨a_i⟩ -> ⟨b_i⟩.
struct PartialAutomorphism {
  FiniteGroup ambient;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> domain;  // sorted elements of ⟨a_i⟩
  std::vector<Elem> range;   // sorted elements of ⟨b_i⟩
  std::vector<Elem> extension;  // extension[x] for x in domain, kNoImage elsewhere

  Elem operator()(Elem x) const { return extension[x]; }
  bool is_identity() const;
};

/// Raised when a pairing does not extend to an isomorphism. `word` is a
/// product of the paired elements (generator i written as x_i) that is the
/// identity on one side and not on the other.
class RejectedPairing : public InputError {
 public:
  RejectedPairing(std::string message, std::string word, bool trivial_in_domain)
      : InputError(std::move(message)), word(std::move(word)),
        trivial_in_domain(trivial_in_domain) {}
  std::string word;
  bool trivial_in_domain;
};

/// Accepts iff the diagonal subgroup ⟨(a_i, b_i)⟩ of G×G has the same order
/// as ⟨a_i⟩ and ⟨b_i⟩. Throws RejectedPairing otherwise, InputError for
/// out-of-range elements.
PartialAutomorphism validate_partial_automorphism(const FiniteGroup& G,
                                                  const std::vector<std::pair<Elem, Elem>>& pairs);

/// Every isomorphism from the subgroup H onto the subgroup K of G (both
/// sorted element lists), found by trying all images of a generating set of
/// H. Each map is a vector indexed like `H`.
std::vector<std::vector<Elem>> subgroup_isomorphisms(const FiniteGroup& G,
                                                     const std::vector<Elem>& H,
                                                     const std::vector<Elem>& K);

/// Calls `visit` on each isomorphism H -> K until it returns false.
void for_each_subgroup_isomorphism(const FiniteGroup& G, const std::vector<Elem>& H,
                                   const std::vector<Elem>& K,
                                   const std::function<bool(const std::vector<Elem>&)>& visit);

/// An isomorphism G -> H as a total map, or empty if none exists.
std::vector<Elem> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H);

/// All automorphisms (as element maps), by generator-image search.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& G);

}  // namespace ultrahom
