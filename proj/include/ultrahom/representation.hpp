#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ultrahom/caps.hpp"
#include "ultrahom/finite_group.hpp"
#include "ultrahom/perm_group.hpp"

namespace ultrahom {

/// A map from a FiniteGroup into Sym(degree). The regular representation is
/// computed from the multiplication table on demand; other representations
/// store one image per element.
class PermRepresentation {
 public:
  PermRepresentation() = default;
  /// images[g] is the image of element g. Throws InputError on size or
  /// degree mismatch.
  PermRepresentation(FiniteGroup source, std::size_t degree, std::vector<Perm> images);

  const FiniteGroup& source() const { return source_; }
  std::size_t degree() const { return degree_; }
  bool is_regular() const { return regular_; }
  Perm operator()(Elem g) const;
  std::vector<Perm> operator()(const std::vector<Elem>& gs) const;

  /// Image of a generating set of the source.
  PermGroup image_group() const;

  /// rho(g) rho(x) = rho(gx) for g in a generating set and every x.
  bool is_homomorphism() const;
  /// Distinct elements have distinct images.
  bool is_injective() const;
  /// The element mapped to p, if any.
  std::optional<Elem> preimage(const Perm& p) const;

 private:
  friend PermRepresentation regular_representation(const FiniteGroup& G, const Caps& caps);
  FiniteGroup source_ = FiniteGroup::trivial();
  std::size_t degree_ = 0;
  bool regular_ = false;
  std::shared_ptr<const std::vector<Perm>> images_;
};

/// g ↦ (a ↦ g·a) on element indices. Left multiplication is the action that
/// composes correctly under p∘q = "apply q first". Throws CapExceeded when
/// |G| > caps.degree.
PermRepresentation regular_representation(const FiniteGroup& G, const Caps& caps = {});

/// A conjugating element together with the equations a^witness = p(a) it
/// was checked against.
struct WitnessCertificate {
  PermGroup ambient = PermGroup::symmetric(1);
  Perm witness;
  std::vector<std::pair<Perm, Perm>> equations;
  std::string tag;

  /// Index of the first equation that fails, if any.
  std::optional<std::size_t> first_failure() const;
  /// Every equation holds and the witness lies in the ambient group.
  bool verify() const;
};

}  // namespace ultrahom
