#pragma once

#include <string>
#include <vector>

#include "ultrahom/caps.hpp"
#include "ultrahom/homomorphism.hpp"
#include "ultrahom/representation.hpp"

namespace ultrahom {

/// B and C embedded in a permutation group D over a common subgroup A.
struct AmalgamResult {
  PermGroup D = PermGroup::symmetric(1);
  PermRepresentation embed_B, embed_C;
  std::vector<Perm> base_image;  // images of A's elements, indexed like A
  std::vector<WitnessCertificate> witnesses;
  bool intersection_checked = false;
  bool intersection_exact = false;
  std::vector<std::string> stages;  // completed stages, in order
  bool complete = true;
  std::string stopped;  // why the pipeline stopped early
};

/// Neumann's permutational product. With B = ⊔ A·s and C = ⊔ A·t (right
/// cosets, least-index representatives) the point set is A × S × T; b
/// acts by rewriting b·a·s = a'·s' and fixing t, c by rewriting c·a·t =
/// a'·t' and fixing s. Both actions restrict to left multiplication on the
/// A coordinate, so the images of A agree. Embeddings are checked
/// injective; the intersection of the images is compared element-wise with
/// the image of A when |B|·|C| <= caps.pairwise_check (flagged, not failed,
/// above). Throws InputError for invalid embeddings and CapExceeded when
/// |A|·[B:A]·[C:A] > caps.neumann_degree.
AmalgamResult neumann_amalgam(const FiniteGroup& A, const FiniteGroup& B, const FiniteGroup& C,
                              const GroupHomomorphism& iAB, const GroupHomomorphism& iAC,
                              const Caps& caps = {});

/// An amalgam D of B and C over A with elements g_k such that b^(g_k) =
/// p_k(b) and c^(g_k) = q_k(c) on the domains. Pipeline: Hall witnesses
/// g_k for p_k × q_k on B × C; B̄ = ⟨B × 1, (g_k, g_k)⟩ and
/// C̄ = ⟨1 × C, (g_k, g_k)⟩ inside G × ⟨g_1..g_n⟩; Neumann product of B̄
/// and C̄ over ⟨A, (g_k, g_k)⟩. A stage that hits a cap ends the pipeline
/// with `complete` false and the finished stages listed. Throws InputError
/// when p_k and q_k do not restrict to the same automorphism of A.
AmalgamResult eppa_amalgam_with_automorphisms(const FiniteGroup& A, const FiniteGroup& B, const FiniteGroup& C,
                                              const GroupHomomorphism& iAB, const GroupHomomorphism& iAC,
                                              const std::vector<PartialAutomorphism>& ps,
                                              const std::vector<PartialAutomorphism>& qs,
                                              const Caps& caps = {});

}  // namespace ultrahom
