#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ultrahom/finite_group.hpp"

namespace ultrahom {

/// Coordinates of an element of Z/d_1 × ... × Z/d_k.
using AbVec = std::vector<std::int64_t>;

/// A finite abelian group Z/d_1 × ... × Z/d_k. Groups built with
/// `from_invariant_factors` are in normal form (d_i | d_{i+1}, d_i >= 2);
/// `product` accepts any list of cyclic orders.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Throws InputError unless each d_i >= 2 and d_i | d_{i+1}.
  static AbelianGroup from_invariant_factors(std::vector<std::int64_t> factors);
  /// Z/m_1 × ... × Z/m_k for arbitrary m_i >= 1 (coordinates kept as given).
  static AbelianGroup product(std::vector<std::int64_t> moduli);
  /// The normal form of Z/m_1 × ... × Z/m_k.
  static AbelianGroup normalized(const std::vector<std::int64_t>& moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::vector<std::int64_t> invariant_factors() const;
  bool is_normal_form() const;
  std::size_t rank() const { return moduli_.size(); }
  std::uint64_t order() const;
  std::int64_t exponent() const;

  /// Mixed-radix index, last coordinate fastest.
  std::uint64_t index(const AbVec& v) const;
  AbVec element(std::uint64_t index) const;
  AbVec add(const AbVec& a, const AbVec& b) const;
  AbVec neg(const AbVec& a) const;
  AbVec scale(const AbVec& a, std::int64_t k) const;
  AbVec reduce(AbVec a) const;
  AbVec zero() const { return AbVec(moduli_.size(), 0); }
  AbVec basis(std::size_t i) const;
  std::int64_t element_order(const AbVec& a) const;

  /// Sorted element indices of ⟨gens⟩.
  std::vector<std::uint64_t> span(const std::vector<AbVec>& gens) const;

  /// Multiplication table with element i = element(i).
  FiniteGroup to_finite_group() const;

  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::int64_t> moduli_;
};

/// Diagonal of the Smith normal form of an integer matrix (rows are
/// relations); nonzero entries ascending, each dividing the next.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> matrix);

/// Invariant factors of (Z/m_1 × ... × Z/m_k) / ⟨gens⟩.
std::vector<std::int64_t> quotient_invariants(const AbelianGroup& B, const std::vector<AbVec>& gens);

/// A subgroup B0 ≤ B isomorphic to B/A, with independent generators
/// realizing the invariant factors of B/A.
struct QuotientSubgroup {
  std::vector<std::int64_t> invariant_factors;
  std::vector<AbVec> generators;  // generators[i] has order invariant_factors[i]
  std::vector<std::uint64_t> elements;
};

QuotientSubgroup abelian_quotient_subgroup(const AbelianGroup& B, const std::vector<AbVec>& A_gens);

/// An automorphism of an abelian group as a table on element indices.
struct AbelianAutomorphism {
  std::vector<std::uint64_t> table;
  std::string construction;
  std::uint64_t operator()(std::uint64_t x) const { return table[x]; }
};

/// Checks that `table` is a bijective homomorphism of G.
bool is_automorphism(const AbelianGroup& G, const std::vector<std::uint64_t>& table);

/// A non-identity automorphism of G (odd order) fixing g, for g not
/// generating G. Throws PreconditionError otherwise.
AbelianAutomorphism odd_abelian_fixing_automorphism(const AbelianGroup& G, const AbVec& g);

/// Every abelian group of order n in normal form.
std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n);

}  // namespace ultrahom
