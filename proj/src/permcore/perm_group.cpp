#include "ultrahom/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "ultrahom/error.hpp"

namespace ultrahom {

namespace {

bool fixes_prefix(const Perm& g, const std::vector<Point>& base, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j)
    if (g(base[j]) != base[j]) return false;
  return true;
}

Point smallest_moved_point(const Perm& g) {
  for (std::size_t x = 0; x < g.degree(); ++x)
    if (g(static_cast<Point>(x)) != x) return static_cast<Point>(x);
  throw InternalError("identity has no moved point");
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  std::vector<Perm> strong;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);
  }
  std::vector<Point> base;
  for (const Perm& s : strong)
    if (fixes_prefix(s, base, base.size())) base.push_back(smallest_moved_point(s));

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) levels_[i].base_point = base[i];
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i, strong);

  auto sift_from = [&](Perm h, std::size_t start) -> std::pair<Perm, std::size_t> {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      Point beta = h(levels_[l].base_point);
      if (!levels_[l].in_orbit(beta)) return {std::move(h), l};
      h = compose(levels_[l].rep_inverse(beta), h);
    }
    return {std::move(h), levels_.size()};
  };

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restart; ++oi) {
      Point beta = levels_[li].orbit[oi];
      for (std::size_t si = 0; si < levels_[li].generators.size(); ++si) {
        const ChainLevel& level = levels_[li];
        const Perm& s = level.generators[si];
        Point gamma = s(beta);
        Perm h = compose(level.rep_inverse(gamma), compose(s, level.transversal[oi]));
        if (h.is_identity()) continue;
        auto [residue, j] = sift_from(std::move(h), li + 1);
        if (residue.is_identity() && j == levels_.size()) continue;
        if (j == levels_.size()) {
          ChainLevel fresh;
          fresh.base_point = smallest_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        strong.push_back(residue);
        for (std::size_t l = li + 1; l <= j; ++l) rebuild_level(l, strong);
        i = static_cast<long>(j);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
}

void StabilizerChain::rebuild_level(std::size_t i, const std::vector<Perm>& strong) {
  std::vector<Point> base;
  for (std::size_t l = 0; l < i; ++l) base.push_back(levels_[l].base_point);
  ChainLevel& level = levels_[i];
  level.generators.clear();
  for (const Perm& s : strong)
    if (fixes_prefix(s, base, i)) level.generators.push_back(s);
  level.orbit.assign(1, level.base_point);
  level.orbit_slot.assign(degree_, -1);
  level.orbit_slot[level.base_point] = 0;
  level.transversal.assign(1, Perm(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point gamma = level.orbit[k];
    for (const Perm& s : level.generators) {
      Point delta = s(gamma);
      if (level.orbit_slot[delta] >= 0) continue;
      level.orbit_slot[delta] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(delta);
      level.transversal.push_back(compose(s, level.transversal[k]));
    }
  }
  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (const Perm& u : level.transversal) level.inverse_transversal.push_back(u.inverse());
}

StabilizerChain StabilizerChain::symmetric(std::size_t degree) {
  StabilizerChain chain;
  chain.degree_ = degree;
  std::vector<Perm> adjacent;
  for (std::size_t j = 0; j + 1 < degree; ++j)
    adjacent.push_back(Perm::from_cycles(degree, {{static_cast<Point>(j), static_cast<Point>(j + 1)}}));
  for (std::size_t i = 0; i + 1 < degree; ++i) {
    ChainLevel level;
    level.base_point = static_cast<Point>(i);
    level.generators.assign(adjacent.begin() + static_cast<long>(i), adjacent.end());
    level.orbit_slot.assign(degree, -1);
    for (std::size_t g = i; g < degree; ++g) {
      level.orbit_slot[g] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(static_cast<Point>(g));
      Perm u = g == i ? Perm(degree)
                      : Perm::from_cycles(degree, {{static_cast<Point>(i), static_cast<Point>(g)}});
      level.inverse_transversal.push_back(u);
      level.transversal.push_back(std::move(u));
    }
    chain.levels_.push_back(std::move(level));
  }
  return chain;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

std::vector<Perm> StabilizerChain::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& l : levels_)
    for (const Perm& g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& l : levels_) o *= l.orbit.size();
  return o;
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm& g) const {
  if (g.degree() != degree_) throw InputError("degree mismatch in sift");
  Perm h = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    Point beta = h(levels_[l].base_point);
    if (!levels_[l].in_orbit(beta)) return {std::move(h), l};
    h = compose(levels_[l].rep_inverse(beta), h);
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, passed] = sift(g);
  return passed == levels_.size() && residue.is_identity();
}

struct PermGroup::Lazy {
  std::once_flag once;
  std::optional<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0) throw InputError("permutation group degree must be positive");
  for (const Perm& g : generators_)
    if (g.degree() != degree) throw InputError("generator degree mismatch");
}

PermGroup::PermGroup(std::vector<Perm> generators)
    : PermGroup(generators.empty() ? 0 : generators.front().degree(), std::move(generators)) {}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
    if (n > 2) gens.push_back(Perm::from_cycles(n, {cycle}));
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  }
  PermGroup g(n, std::move(gens));
  g.full_symmetric_ = true;
  return g;
}

const StabilizerChain& PermGroup::chain() const {
  if (full_symmetric_ && degree_ > chain_limit)
    throw CapExceeded("refusing to materialize the stabilizer chain of Sym(" +
                      std::to_string(degree_) + ")");
  std::call_once(lazy_->once, [this] {
    if (full_symmetric_)
      lazy_->chain.emplace(StabilizerChain::symmetric(degree_));
    else
      lazy_->chain.emplace(degree_, generators_);
  });
  return *lazy_->chain;
}

BigInt PermGroup::order() const {
  if (full_symmetric_) return factorial(degree_);
  return chain().order();
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  if (full_symmetric_) return true;
  return chain().contains(g);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order() > cap)
    throw CapExceeded("group of order " + order().str() + " exceeds enumeration cap " +
                      std::to_string(cap));
  const auto& levels = chain().levels();
  std::vector<Perm> out;
  // Depth-first over transversal choices: g = u_0 u_1 ... u_{k-1}.
  auto recurse = [&](auto&& self, std::size_t depth, const Perm& prefix) -> void {
    if (depth == levels.size()) {
      out.push_back(prefix);
      return;
    }
    for (const Perm& u : levels[depth].transversal) self(self, depth + 1, compose(prefix, u));
  };
  recurse(recurse, 0, Perm(degree_));
  return out;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::optional<std::vector<Perm>> enumerate_closure(std::size_t degree,
                                                   const std::vector<Perm>& generators,
                                                   std::size_t cap) {
  std::vector<Perm> elements{Perm(degree)};
  std::unordered_set<Perm, PermHash> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& s : generators) {
      Perm y = compose(elements[i], s);
      if (seen.insert(y).second) {
        if (elements.size() >= cap) return std::nullopt;
        elements.push_back(std::move(y));
      }
    }
  }
  return elements;
}

}  // namespace ultrahom
