#pragma once

#include <string>
#include <vector>

#include "ultrahom/abelian.hpp"
#include "ultrahom/caps.hpp"
#include "ultrahom/checks.hpp"
#include "ultrahom/homomorphism.hpp"
#include "ultrahom/representation.hpp"

namespace ultrahom {

struct HallWitness {
  PermRepresentation embedding;  // regular representation of the ambient group
  WitnessCertificate certificate;
};

/// A permutation w of the elements of G with rho(d)^w = rho(p(d)) for every
/// d in the domain of p, where rho is the regular representation. Built
/// from the right cosets D·x_i and R·y_i (representatives = least index,
/// cosets in index order) as the point map d·x_i ↦ p(d)·y_i or its
/// inverse, whichever satisfies the equations. All |D| equations are
/// verified. Throws CapExceeded when |G| > caps.degree.
HallWitness hall_witness(const PartialAutomorphism& p, const Caps& caps = {});

/// Same, reusing an existing regular representation of p.ambient.
WitnessCertificate hall_witness(const PermRepresentation& regular, const PartialAutomorphism& p);

/// B = ⟨rho(A), w_1, ..., w_n⟩ ≤ Sym(|A|) with w_i a Hall witness for p_i;
/// conjugation by w_i is an automorphism of B extending p_i.
struct NEppaClosure {
  PermRepresentation embedding;
  PermGroup B = PermGroup::symmetric(1);
  std::vector<WitnessCertificate> automorphisms;  // ambient B
};
NEppaClosure n_eppa_closure(const FiniteGroup& A, const std::vector<PartialAutomorphism>& ps,
                            const Caps& caps = {});

/// Pairwise commuting witnesses g_i with a^(g_i) = sigma_i(a) for all a in
/// A. sigmas[0] plays the role of sigma_0: every sigma must fix its fixed
/// points. Each step enumerates D_k = ⟨A, g_0..g_k⟩, extends sigma_(k+1)
/// to ⟨A^(B_k)⟩ by a^b ↦ sigma(a)^b, and takes a Hall witness in the
/// regular representation of D_k of (that extension, identity on B_k).
struct CommutingWitnesses {
  PermRepresentation embedding;  // A into the final ambient
  std::vector<WitnessCertificate> certificates;
  std::vector<std::size_t> stage_orders;  // |D_k| for each completed step
  bool complete = true;
  std::string stopped;
  /// All certificates verify and all witnesses commute.
  bool verify() const;
};
/// Each sigma is an element map of A. Throws PreconditionError when the
/// sigmas do not commute, are not automorphisms, violate the fixed-point
/// condition, or a runtime re-check of the extension step fails.
CommutingWitnesses commuting_witnesses(const FiniteGroup& A, const std::vector<std::vector<Elem>>& sigmas,
                                       const Caps& caps = {});

/// A = Z/p^k × A' written with prime-power cyclic factors; sigma multiplies
/// the Z/p^k coordinate by a primitive root (order p^(k-1)(p-1)) and fixes
/// A'; g is a Hall witness for sigma and B = ⟨g, A'⟩.
struct OddPrimeStep {
  AbelianGroup primary;
  std::size_t factor = 0;
  std::int64_t multiplier = 0;
  std::uint64_t sigma_order = 0;
  WitnessCertificate certificate;
  PermGroup B = PermGroup::symmetric(1);
  std::uint64_t B_order = 0;
  std::vector<std::uint64_t> B_invariants;
  CheckList checks;
};
/// Throws InputError unless p is an odd prime dividing |A|.
OddPrimeStep odd_prime_abelian_builder(const AbelianGroup& A, std::uint64_t p, const Caps& caps = {});

}  // namespace ultrahom
