#pragma once

#include <cstdint>
#include <vector>

#include "ultrahom/checks.hpp"

namespace ultrahom {

/// Elements of (Z/2)^n are bit masks: bits [0, m) hold v1, the middle bit
/// (odd n only) holds w, bits [n-m, n) hold v2, with m = n/2. An m×m matrix
/// f over Z/2 is a mask with entry (r, c) at bit r·m + c.
std::uint32_t apply_sigma_f(int n, std::uint32_t f, std::uint32_t v);

/// σ_f(v1, w, v2) = (v1 + f(v2), w, v2) for every f, with the structural
/// checks: σ_0 = id, σ_f σ_g = σ_{f+g}, each σ_f an automorphism, f ↦ σ_f
/// injective (so the family is elementary abelian of order 2^(m²)), and the
/// fixed points of σ_id are exactly the (v1, w, 0). Exhaustive for m ≤ 3,
/// sampled with a fixed seed above. Throws InputError for n < 2 and
/// CapExceeded for n > 10.
struct SigmaFamilyReport {
  int n = 0;
  int m = 0;
  std::uint64_t family_order_log2 = 0;
  std::uint64_t sigma_id_fixed_points = 0;
  CheckList checks;
};
SigmaFamilyReport sigma_family_2explosion(int n);

/// Automorphisms of Z/2^k × (Z/2)^m; element (a, j) has index a·2^m + j.
/// σ1 multiplies a by 3 (taken to be the identity when k = 2), σ2 negates a,
/// τ_i adds a mod 2 into j_i.
struct SigmaTauReport {
  int k = 0;
  int m = 0;
  std::vector<std::uint32_t> sigma1, sigma2;
  std::vector<std::vector<std::uint32_t>> taus;
  std::uint64_t sigma1_order = 0;
  std::vector<std::uint64_t> generated_invariants;
  CheckList checks;
};
/// Throws InputError for k < 2 or m < 0, CapExceeded for k > 7 or m > 4.
SigmaTauReport sigma_tau_cyclic2(int k, int m);

}  // namespace ultrahom
