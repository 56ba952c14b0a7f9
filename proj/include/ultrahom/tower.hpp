#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ultrahom/caps.hpp"
#include "ultrahom/homomorphism.hpp"
#include "ultrahom/representation.hpp"
#include "ultrahom/finite_group.hpp"
#include "ultrahom/perm_group.hpp"

namespace ultrahom {

/// Bumped whenever the on-disk level format changes.
inline constexpr int kTowerFormatVersion = 1;

/// One level of the chain G_0 = S_3, G_(n+1) = Sym(G_n). Level n+1 acts on
/// the element indices of level n, which are fixed by a breadth-first
/// closure from the generator list, identity first.
struct TowerLevel {
  std::size_t index = 0;
  PermGroup group = PermGroup::symmetric(1);
  /// Enumerated elements with their realization; absent for level 2.
  std::optional<FiniteGroup> elements;
  std::string content_hash;
  bool from_cache = false;
  /// Up-embedding into the next level spot-checked (generators and sampled
  /// elements: injective, order preserving, multiplicative).
  bool up_embedding_checked = false;
};

struct TowerOptions {
  /// Cache directory; when unset, $ULTRAHOM_CACHE is used if present,
  /// otherwise nothing is persisted.
  std::optional<std::filesystem::path> cache_dir;
  Caps caps;
};

class Tower {
 public:
  /// Builds (or loads) levels 0..max_level. Throws InputError for
  /// max_level > 2 and for an unusable cache directory. A cache file with a
  /// bad hash or version is rebuilt, with a warning.
  explicit Tower(std::size_t max_level, TowerOptions options = {});

  std::size_t max_level() const { return levels_.size() - 1; }
  const TowerLevel& level(std::size_t n) const;
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }

  /// The enumerated group of level n <= 1. Throws InputError otherwise.
  const FiniteGroup& finite(std::size_t n) const;
  /// Index of g among the elements of level n; InputError if g is not one.
  Elem index_of(std::size_t n, const Perm& g) const;
  /// Image of g under the regular embedding of level n into level n+1.
  Perm up(std::size_t n, const Perm& g) const;
  /// Image of g (an element of level `from`) in level `to` >= from.
  Perm lift(std::size_t from, std::size_t to, const Perm& g) const;

 private:
  std::vector<TowerLevel> levels_;
  std::vector<std::string> warnings_;
  std::optional<std::filesystem::path> cache_dir_;
};

/// SHA-256 of a string, lowercase hex.
std::string sha256_hex(const std::string& data);

/// A Hall witness for p (a partial automorphism of level n <= 1) in
/// level n+1: rho(d)^w = rho(p(d)) for every d in the domain, rho being the
/// up-embedding. InputError for n >= max_level.
WitnessCertificate inner_uh_witness(const Tower& tower, std::size_t n, const PartialAutomorphism& p);

/// w in level n+1 with up(a)^w = up(b). The regular images of two elements
/// of order m both consist of |G_n|/m cycles of length m, so cycle matching
/// always succeeds. InputError when the orders differ.
WitnessCertificate conjugacy_witness_same_order(const Tower& tower, std::size_t n, const Perm& a, const Perm& b);

struct NthRoot {
  std::size_t level = 0;  // level holding h
  Perm h;
  Perm g_image;  // g lifted to that level
  std::uint64_t k = 1;
  /// Cycle lengths of h, one entry per cycle of g_image it absorbs.
  std::vector<std::size_t> cycle_lengths;
};

/// h with h^k = g lifted to the first level L >= n where a root exists. At
/// level L each group of d cycles of length c in the image of g is merged
/// into one cycle of length c·d, which needs d | k and gcd(c, k/d) = 1.
/// InputError for k = 0 or an element outside level n, CapExceeded when
/// k·ord(g) > deg of the top level, PreconditionError when no level up to
/// max_level has a root (for example ord(g) = 4, k = 8).
NthRoot nth_root(const Tower& tower, std::size_t n, const Perm& g, std::uint64_t k);

/// Witness that b is not in the double centralizer of A0 once the level is
/// extended: the permutational product of G_n with itself over H = ⟨A0⟩
/// carries the coordinate swap c with h^c = h on H and b^c equal to the
/// twin of b in the second copy, so b^c != b.
struct EscapeWitness {
  std::vector<Elem> subgroup;  // ⟨A0⟩ in level n
  std::size_t degree = 0;
  Perm b_image, b_twin;
  WitnessCertificate certificate;
};
/// PreconditionError when b lies in ⟨A0⟩, CapExceeded when the product is
/// larger than caps.neumann_degree.
EscapeWitness escape_witness(const Tower& tower, std::size_t n, const std::vector<Perm>& A0, const Perm& b,
                             const Caps& caps = {});

}  // namespace ultrahom
