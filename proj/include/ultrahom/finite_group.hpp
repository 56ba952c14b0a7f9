#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ultrahom/perm_group.hpp"

namespace ultrahom {

/// Index of an element of a FiniteGroup; 0 is always the identity.
using Elem = std::uint32_t;

/// A finite group with enumerated elements and a full multiplication table.
/// Copies share the (immutable) table.
class FiniteGroup {
 public:
  /// Validates a Cayley table: square, element 0 is the identity, every row
  /// and column is a permutation, and associativity holds (on all triples
  /// up to order 256, on a fixed sample of triples above). Throws InputError.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table,
                                std::string name = {});

  /// The closure of `gens` in Sym(degree), enumerated breadth first from the
  /// identity. The permutations are kept as a realization. Throws
  /// CapExceeded above `cap` elements.
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Perm>& gens,
                                       std::size_t cap, std::string name = {});

  /// `elements` must be closed under composition and start with the identity.
  static FiniteGroup from_elements(std::vector<Perm> elements, std::string name = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return d_->n; }
  Elem mul(Elem a, Elem b) const { return d_->table[std::size_t(a) * d_->n + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem pow(Elem a, long long k) const;
  std::size_t element_order(Elem a) const { return d_->orders[a]; }
  /// a^-1 b a.
  Elem conj(Elem b, Elem a) const { return mul(inv(a), mul(b, a)); }
  bool is_abelian() const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::string& name() const { return d_->name; }
  FiniteGroup renamed(std::string name) const;

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<Elem> generate(const std::vector<Elem>& gens) const;
  /// A small generating set: repeatedly adds the element that enlarges the
  /// generated subgroup most (ties to the least index).
  std::vector<Elem> generating_set() const;
  std::vector<Elem> generating_set(const std::vector<Elem>& subgroup) const;

  bool has_realization() const { return !d_->perms.empty(); }
  /// Element i is realized by realization()[i].
  const std::vector<Perm>& realization() const { return d_->perms; }
  std::optional<Elem> index_of(const Perm& p) const;

  std::vector<std::vector<Elem>> table() const;

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> orders;
    std::string name;
    std::vector<Perm> perms;
    std::vector<std::pair<Perm, Elem>> perm_index;  // sorted by Perm
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteGroup finish(Data d);
  std::shared_ptr<const Data> d_;
};

/// G × H with coordinate embeddings; (g, h) has index g·|H| + h.
struct DirectProduct {
  FiniteGroup group;
  std::vector<Elem> embed_first;
  std::vector<Elem> embed_second;
  Elem pair(Elem g, Elem h) const { return static_cast<Elem>(g * second_order + h); }
  std::size_t second_order = 1;
};

/// Throws CapExceeded when |G|·|H| > cap.
DirectProduct direct_product(const FiniteGroup& G, const FiniteGroup& H,
                             std::size_t cap = 10'000);

/// N ⋊ K where generator k_i of K acts on N by the automorphism
/// `actions[i]` (an element permutation of N). Multiplication is
/// (n1, k1)(n2, k2) = (n1 · k1(n2), k1 k2). Throws InputError if the
/// actions do not define a homomorphism K → Aut(N).
FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& K,
                               const std::vector<Elem>& k_generators,
                               const std::vector<std::vector<Elem>>& actions,
                               std::string name = {});

/// ⟨a, x | a^M = 1, x^m = a^t, x a x^-1 = a^r⟩ with elements a^i x^j.
/// Requires r^m ≡ 1 and r·t ≡ t (mod M).
FiniteGroup metacyclic(std::size_t M, std::size_t m, std::size_t r, std::size_t t,
                       std::string name = {});

/// Every subgroup, as sorted element lists, ordered by size then contents.
std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& G);

/// Invariant factors of an abelian group, recovered from element-order
/// counts. Throws InputError if G is not abelian.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& G);

/// Same, from the list of element orders of an abelian group.
std::vector<std::uint64_t> abelian_invariants_from_orders(const std::vector<std::uint64_t>& orders);

/// Center of G as a sorted element list.
std::vector<Elem> center(const FiniteGroup& G);

}  // namespace ultrahom
