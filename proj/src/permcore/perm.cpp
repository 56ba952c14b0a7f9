#include "ultrahom/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ultrahom/error.hpp"

namespace ultrahom {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InputError("permutation image array is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x])
        throw InputError("cycles are not disjoint or exceed the degree");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::parse_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i) throw InputError("expected a point in cycle notation");
      unsigned long v = std::stoul(text.substr(start, i - start));
      if (v == 0) throw InputError("cycle notation points are 1-based");
      cycle.push_back(static_cast<Point>(v - 1));
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x]] = static_cast<Point>(x);
  return unchecked(std::move(inv));
}

Perm Perm::pow(long long k) const {
  std::vector<Point> out(images_.size());
  std::vector<bool> seen(images_.size(), false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    long long len = static_cast<long long>(cycle.size());
    long long shift = ((k % len) + len) % len;
    for (long long i = 0; i < len; ++i)
      out[cycle[i]] = cycle[(i + shift) % len];
  }
  return unchecked(std::move(out));
}

std::vector<std::vector<Point>> Perm::cycles(bool with_fixed) const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    if (with_fixed || cycle.size() > 1) result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(true)) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

BigInt Perm::order_big() const {
  BigInt result = 1;
  std::vector<std::size_t> lengths = cycle_type();
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  for (std::size_t len : lengths) {
    BigInt l = len;
    result = result / boost::multiprecision::gcd(result, l) * l;
  }
  return result;
}

std::uint64_t Perm::order() const {
  BigInt o = order_big();
  if (o > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("permutation order exceeds 64 bits");
  return static_cast<std::uint64_t>(o);
}

std::vector<Point> Perm::moved_points() const {
  std::vector<Point> moved;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) moved.push_back(static_cast<Point>(x));
  return moved;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == x) ++n;
  return n;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InputError("degree mismatch in composition");
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = p(q(static_cast<Point>(x)));
  return Perm::unchecked(std::move(out));
}

Perm conjugate(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree())
    throw InputError("degree mismatch in conjugation");
  // x -> h^-1(g(h(x)))
  Perm hinv = h.inverse();
  std::vector<Point> out(g.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = hinv(g(h(static_cast<Point>(x))));
  return Perm::unchecked(std::move(out));
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.to_string();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ultrahom
