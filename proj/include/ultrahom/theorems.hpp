#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultrahom/caps.hpp"
#include "ultrahom/checks.hpp"
#include "ultrahom/finite_group.hpp"
#include "ultrahom/homomorphism.hpp"
#include "ultrahom/perm_group.hpp"
#include "ultrahom/report.hpp"
#include "ultrahom/representation.hpp"

namespace ultrahom {

// ---- inner ultrahomogeneity -------------------------------------------------

struct InnerUHResult {
  bool holds = true;
  std::size_t partial_automorphisms = 0;  // isomorphisms between subgroups examined
  /// First isomorphism H -> K with no conjugating element: generators of H
  /// and their images.
  std::optional<std::vector<std::pair<Elem, Elem>>> counterexample;
};

/// Every isomorphism between subgroups of G is conjugation by an element of
/// G. Throws CapExceeded when |G| > max_order.
InnerUHResult check_inner_ultrahomogeneous(const FiniteGroup& G, std::size_t max_order = 48);

// ---- identities in symmetric groups ----------------------------------------

/// (1,2,...,n)(n,n+1,n-1,...,2) = (1,2)(n,n+1) in S_(n+1), evaluated with
/// the library's right-to-left product and with the opposite order.
struct NCycleIdentity {
  int n = 0;
  bool right_to_left = false;
  bool left_to_right = false;
};
/// InputError unless 3 <= n <= 12.
NCycleIdentity ncycle_identity_check(int n);

/// A shortest list of conjugates of g (in G) whose product is h, found by
/// breadth-first search over products; nullopt when none of length at most
/// max_width exists. The empty list stands for h = 1. InputError for g = 1,
/// CapExceeded when |G| > cap.
std::optional<std::vector<Perm>> conjugate_width_oracle(const PermGroup& G, const Perm& g, const Perm& h,
                                                        std::size_t max_width, std::size_t cap = 5000);

/// At most four elements of order n (in some Sym(d)) whose product has
/// order m. The target is two disjoint m-cycles, written as r1·r2 with
/// reflections r1, r2 (padded by one shared transposition when both are
/// odd); each involution is split into pairs of transpositions, and each
/// pair into two n-cycles through the n-cycle identity on n-3 fresh points.
struct OrderProduct {
  int n = 0, m = 0;
  std::size_t degree = 0;
  std::vector<Perm> factors;  // each of order n, at most 4
  Perm product;
  CheckList checks;
};
/// InputError for n < 2 or m < 1.
OrderProduct order_product_check(int n, int m);

/// For sampled (g, h) in G with g^h = g^-1: g^-2 = h^-1 h^(g^-1) (the
/// identity the derivation produces) and, separately labelled, the form
/// g^-2 = h^(g^-1) h^-1, which holds exactly when g^4 = 1. G is enumerated
/// (cap caps.enumeration).
VerificationReport inversion_identity_check(const PermGroup& G, std::size_t samples, std::uint64_t seed,
                                            const Caps& caps = {});

/// (Z/2)^N with generators g_k in its regular representation; g_sigma is a
/// Hall witness for g_k -> g_sigma(k). Checks
/// g_k^(g_sigma^(g_tau)) = g_(tau sigma tau^-1 (k)) for fixed and sampled
/// sigma, tau. InputError unless 5 <= N <= 8.
VerificationReport permuted_generator_identity(int N, std::size_t samples, std::uint64_t seed);

// ---- arithmetic -------------------------------------------------------------

struct PeelingStep {
  std::uint64_t p = 0, k = 0, m = 0;  // p = 2^k m + 1, m odd
  std::uint64_t l = 0, n = 0;         // after the step
};
struct PeelingTrace {
  std::uint64_t order = 0, l0 = 0, n0 = 0;
  std::vector<PeelingStep> steps;
  bool terminates = false;        // n reaches 1
  bool within_log_steps = false;  // steps <= log2(order)
  bool step_inequalities = false;  // n_j * 2^(1+k_j) >= n_(j-1)
  bool final_bound = false;       // n0 <= 2^(k_1+...+k_j0 + j0)
  bool ok() const { return terminates && within_log_steps && step_inequalities && final_bound; }
};
/// Repeatedly removes the largest odd prime p = 2^k m + 1 from the odd part
/// n, replacing it by m and adding k to the 2-exponent l. InputError for
/// order 0 or order > 10^7.
PeelingTrace prime_peeling_bound(std::uint64_t order);
/// Same with a precomputed largest-prime-factor table (lpf[x] for x <= max).
PeelingTrace prime_peeling_bound(std::uint64_t order, const std::vector<std::uint32_t>& lpf);
std::vector<std::uint32_t> largest_prime_factors(std::uint32_t max);

/// For every K in 1..max_K and every group: if the 2-part of the order
/// exceeds 2^(2K^2), the invariant factors contain K+1 even factors or a
/// cyclic 2-part above 2^(2K). Also runs prime_peeling_bound on each order.
VerificationReport finite_exponent_dichotomy_scan(const std::vector<std::vector<std::int64_t>>& invariant_factor_lists,
                                                  int max_K = 8);

// ---- centralizers, types and definability ----------------------------------

/// h with [h, g^n] = 1 and [h, g] != 1 inside the regular representation of
/// <g> x Z/n, where h is a Hall witness for g -> g g0, g0 -> g0.
struct CentralizerGap {
  std::uint64_t g_order = 0, n = 0;
  WitnessCertificate certificate;
  Perm g_image, g0_image;
  CheckList checks;
};
/// InputError unless n >= 2 divides ord(g); CapExceeded when
/// ord(g)·n > caps.degree.
CentralizerGap centralizer_gap_witness(const Perm& g, std::uint64_t n, const Caps& caps = {});

/// g an N^2-cycle: g^k (g^N)^l != 1 for -N < k, l < N, (k, l) != (0, 0),
/// and centralizer_gap_witness(g, N). InputError unless 2 <= N <= 6.
VerificationReport omitted_type_fragment(int N);

/// Generators a_0..a_(2r-1) of (Z/2)^(2r) in the regular representation.
/// Column j of M gives gamma_j: a_(2i) -> a_(2i) when M[i][j] = 1, a_(2i+1)
/// otherwise; checks [a_(2i), gamma_j] = 1 exactly when M[i][j] = 1. Also
/// builds a shift y (a_i -> a_(i+2)) and checks
/// (a_0^(y^k))^(gamma_j) = a_0^(y^k) exactly for k in column j.
/// InputError for an empty or ragged matrix, rows > 4 or columns > 8.
VerificationReport commuting_pattern_realizer(const std::vector<std::vector<int>>& M);

/// S = {h^2 : h in C^2(g)} in the ambient, compared with <g>.
struct OddCyclicDefinability {
  std::uint64_t g_order = 0;
  std::size_t double_centralizer_order = 0;
  std::size_t squares = 0;
  bool contains_cyclic = false;  // <g> ⊆ S, always expected
  bool equal = false;            // S = <g>
  bool double_centralizer_is_cyclic = false;  // C^2(g) = <g>, when equality is expected
  std::string status;            // "equal", "superset"
  CheckList checks;
};
/// InputError unless g has odd order and lies in the ambient; CapExceeded
/// when C^2(g) has more than caps.enumeration elements.
OddCyclicDefinability odd_cyclic_definability_check(const PermGroup& ambient, const Perm& g, const Caps& caps = {});

/// g a product of disjoint p-cycles for p in P; for each A ⊆ P checks
/// ord(g_A) = prod A with g_A = g^(prod(P \ A)), and that the elements of
/// prime order in <g_A> are the union of S_p (p in A). The map A -> set
/// must be injective and respect unions. The same sets are also computed
/// by the double-centralizer formula in Sym(sum P); disagreement is a note,
/// not a failure. InputError for even or repeated primes, |P| > 4 or
/// prod P > 720.
VerificationReport straight_maximality_pattern(const std::vector<std::uint64_t>& P);

/// An automorphism of Q8 of order 4, from the full automorphism group.
struct Q8Automorphism {
  std::size_t aut_order = 0;
  std::vector<Elem> sigma;
  CheckList checks;
};
Q8Automorphism q8_order4_automorphism();

}  // namespace ultrahom
