#pragma once

#include <cstddef>

namespace ultrahom {

/// Resource caps shared by every construction. Caps are configuration, not
/// constants: the CLI exposes them as flags.
struct Caps {
  /// Largest symmetric-group degree a witness may live in.
  std::size_t degree = 10'000;
  /// Largest group whose elements may be enumerated one by one.
  std::size_t enumeration = 100'000;
  /// Largest point set of a permutational product.
  std::size_t neumann_degree = 100'000;
  /// Largest group for which a full multiplication table is materialized.
  std::size_t finite_group = 10'000;
  /// Above this |B|·|C| the element-wise intersection check is skipped.
  std::size_t pairwise_check = 1'000'000;
};

}  // namespace ultrahom
