#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ultrahom/perm.hpp"

namespace ultrahom {

/// One level of a stabilizer chain: the orbit of `base_point` under the
/// strong generators fixing all earlier base points, with coset
/// representatives u (u(base_point) = orbit point) and their inverses.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Perm> generators;
  std::vector<Point> orbit;
  std::vector<int> orbit_slot;  // point -> index in orbit, -1 if absent
  std::vector<Perm> transversal;
  std::vector<Perm> inverse_transversal;

  bool in_orbit(Point x) const { return orbit_slot[x] >= 0; }
  const Perm& rep(Point x) const { return transversal[orbit_slot[x]]; }
  const Perm& rep_inverse(Point x) const { return inverse_transversal[orbit_slot[x]]; }
};

/// Base and strong generating set produced by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  /// The full symmetric group with base 0..n-2 and transposition
  /// transversals.
  static StabilizerChain symmetric(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  std::vector<Perm> strong_generators() const;
  BigInt order() const;

  /// Sifts g through the chain; returns the residue and the number of
  /// levels passed. g is a member iff the residue is the identity and all
  /// levels were passed.
  std::pair<Perm, std::size_t> sift(const Perm& g) const;
  bool contains(const Perm& g) const;

 private:
  StabilizerChain() = default;
  void rebuild_level(std::size_t i, const std::vector<Perm>& strong);
  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

/// A permutation group given by generators. The stabilizer chain is built
/// lazily on first use and shared between copies; the object is otherwise
/// immutable.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  explicit PermGroup(std::vector<Perm> generators);

  /// Sym(n). Membership is trivial and the order is n!; a chain is only
  /// materialized on request (and refused above `chain_limit` points).
  static PermGroup symmetric(std::size_t n);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool is_full_symmetric() const { return full_symmetric_; }

  /// Throws CapExceeded for a full symmetric group above the chain limit.
  const StabilizerChain& chain() const;

  BigInt order() const;
  bool contains(const Perm& g) const;
  std::vector<Point> base() const { return chain().base(); }
  std::vector<Perm> strong_generators() const { return chain().strong_generators(); }
  Perm identity() const { return Perm(degree_); }

  /// Every element, in chain order (identity first). Throws CapExceeded
  /// when the order exceeds `cap`.
  std::vector<Perm> elements(std::size_t cap) const;

  /// Largest degree for which a symmetric group's chain is built.
  static constexpr std::size_t chain_limit = 64;

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  bool full_symmetric_ = false;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// n! as a big integer.
BigInt factorial(std::size_t n);

/// Breadth-first closure of a generator list, identity first. Returns
/// nullopt when more than `cap` elements are found.
std::optional<std::vector<Perm>> enumerate_closure(std::size_t degree,
                                                   const std::vector<Perm>& generators,
                                                   std::size_t cap);

}  // namespace ultrahom
