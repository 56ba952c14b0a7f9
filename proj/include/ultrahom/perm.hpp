#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultrahom {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::uint32_t;

/// A permutation of the points {0, ..., degree-1}, stored as its image array.
///
/// Products follow function composition: `p * q` (equivalently
/// `compose(p, q)`) applies q first and then p. Under this convention the
/// cycle identity (1,2,...,n)(n,n+1,n-1,...,2) = (1,2)(n,n+1) holds, and
/// conjugation g^h = h^-1 g h satisfies (g^h1)^h2 = g^(h1 h2).
class Perm {
 public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(std::size_t degree);

  /// Takes ownership of an image array; throws InputError unless it is a
  /// bijection of [0, images.size()).
  explicit Perm(std::vector<Point> images);

  /// Wraps an image array already known to be a bijection.
  static Perm unchecked(std::vector<Point> images) {
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from disjoint cycles given as 0-based point lists.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  /// Parses cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
  static Perm parse_cycles(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// p^k for any integer k (negative allowed), computed cycle by cycle.
  Perm pow(long long k) const;

  /// Cycles of length >= 2 (or all cycles when `with_fixed` is set), each
  /// starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles(bool with_fixed = false) const;

  /// Sorted multiset of cycle lengths, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  /// lcm of the cycle lengths.
  BigInt order_big() const;
  /// Same as order_big, throws std::overflow_error above 2^64-1.
  std::uint64_t order() const;

  std::vector<Point> moved_points() const;
  std::size_t fixed_point_count() const;

  /// 0-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// p∘q: apply q, then p. Throws InputError on degree mismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// g^h = h^-1 g h.
Perm conjugate(const Perm& g, const Perm& h);

/// [a, b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

/// Least k >= 1 with p^k = 1; alias of Perm::order.
inline std::uint64_t element_order(const Perm& p) { return p.order(); }

std::ostream& operator<<(std::ostream& os, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace ultrahom
