#include "ultrahom/centralizer.hpp"

#include <algorithm>
#include <unordered_set>

#include "ultrahom/error.hpp"

namespace ultrahom {

namespace {

bool commutes_with_all(const Perm& g, const std::vector<Perm>& S) {
  for (const Perm& s : S)
    for (std::size_t x = 0; x < g.degree(); ++x)
      if (g(s(static_cast<Point>(x))) != s(g(static_cast<Point>(x)))) return false;
  return true;
}

std::vector<char> orbit_mask(std::size_t degree, Point start, const std::vector<Perm>& gens) {
  std::vector<char> in(degree, 0);
  std::vector<Point> queue{start};
  in[start] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens) {
      Point y = g(queue[i]);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  return in;
}

// Depth-first search for an element of a stabilizer-chain group commuting
// with S. A partial point map phi records what any such element must do:
// once phi(x) = y is known, phi(s(x)) = s(y) for every s in S.
class CentralizerSearch {
 public:
  CentralizerSearch(const StabilizerChain& chain, const std::vector<Perm>& S)
      : chain_(chain), S_(S), phi_(chain.degree(), -1), used_(chain.degree(), 0) {}

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point x = trail_.back();
      trail_.pop_back();
      used_[static_cast<std::size_t>(phi_[x])] = 0;
      phi_[x] = -1;
    }
  }

  bool assign(Point x, Point y) {
    std::vector<std::pair<Point, Point>> pending{{x, y}};
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      if (phi_[a] == static_cast<long>(b)) continue;
      if (phi_[a] >= 0 || used_[b]) return false;
      phi_[a] = b;
      used_[b] = 1;
      trail_.push_back(a);
      for (const Perm& s : S_) pending.emplace_back(s(a), s(b));
    }
    return true;
  }

  std::optional<Perm> search(std::size_t depth, const Perm& prefix) {
    const auto& levels = chain_.levels();
    if (depth == levels.size()) {
      if (commutes_with_all(prefix, S_)) return prefix;
      return std::nullopt;
    }
    const ChainLevel& level = levels[depth];
    Point beta = level.base_point;
    if (phi_[beta] >= 0) {
      Point target = static_cast<Point>(phi_[beta]);
      for (std::size_t k = 0; k < level.orbit.size(); ++k)
        if (prefix(level.orbit[k]) == target)
          return search(depth + 1, compose(prefix, level.transversal[k]));
      return std::nullopt;
    }
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      std::size_t m = mark();
      if (assign(beta, prefix(level.orbit[k]))) {
        if (auto found = search(depth + 1, compose(prefix, level.transversal[k]))) {
          undo(m);
          return found;
        }
      }
      undo(m);
    }
    return std::nullopt;
  }

 private:
  const StabilizerChain& chain_;
  const std::vector<Perm>& S_;
  std::vector<long> phi_;
  std::vector<char> used_;
  std::vector<Point> trail_;
};

void require_members(const PermGroup& G, const std::vector<Perm>& S) {
  for (const Perm& s : S)
    if (!G.contains(s))
      throw PreconditionError("element " + s.to_string() + " is not in the group");
}

}  // namespace

PermGroup centralizer(const PermGroup& G, const std::vector<Perm>& S) {
  require_members(G, S);
  std::vector<Perm> nontrivial;
  for (const Perm& s : S)
    if (!s.is_identity()) nontrivial.push_back(s);
  if (nontrivial.empty()) return G;

  const StabilizerChain& chain = G.chain();
  const auto& levels = chain.levels();
  CentralizerSearch search(chain, nontrivial);
  std::vector<Perm> gens;

  for (std::size_t i = levels.size(); i-- > 0;) {
    const ChainLevel& level = levels[i];
    std::vector<char> covered = orbit_mask(G.degree(), level.base_point, gens);
    std::vector<char> failed(G.degree(), 0);
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      Point gamma = level.orbit[k];
      if (covered[gamma] || failed[gamma]) continue;
      std::size_t m = search.mark();
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = search.assign(levels[j].base_point, levels[j].base_point);
      std::optional<Perm> found;
      if (ok && search.assign(level.base_point, gamma))
        found = search.search(i + 1, level.transversal[k]);
      search.undo(m);
      if (found) {
        gens.push_back(*found);
        covered = orbit_mask(G.degree(), level.base_point, gens);
      } else {
        // If k in K maps gamma to delta and some g in C sent base to delta,
        // k^-1 g would send base to gamma; so the whole K-orbit fails.
        std::vector<char> orb = orbit_mask(G.degree(), gamma, gens);
        for (std::size_t x = 0; x < orb.size(); ++x)
          if (orb[x]) failed[x] = 1;
      }
    }
  }
  return PermGroup(G.degree(), std::move(gens));
}

PermGroup centralizer_by_enumeration(const PermGroup& G, const std::vector<Perm>& S,
                                     std::size_t cap) {
  require_members(G, S);
  std::vector<Perm> members;
  for (const Perm& g : G.elements(cap))
    if (commutes_with_all(g, S)) members.push_back(g);
  return PermGroup(G.degree(), greedy_generators(G.degree(), members));
}

PermGroup double_centralizer(const PermGroup& G, const std::vector<Perm>& S) {
  PermGroup c = centralizer(G, S);
  return centralizer(G, c.generators());
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H, std::size_t cap) {
  for (const Perm& h : H.generators())
    if (!G.contains(h)) throw PreconditionError("H is not a subgroup of G");
  std::vector<Perm> members;
  for (const Perm& g : G.elements(cap)) {
    bool normalizes = true;
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, g))) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(g);
  }
  return PermGroup(G.degree(), greedy_generators(G.degree(), members));
}

std::optional<Perm> symmetric_conjugator(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in conjugacy test");
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  auto by_length = [](const std::vector<Point>& x, const std::vector<Point>& y) {
    return x.size() < y.size();
  };
  auto ca = a.cycles(true);
  auto cb = b.cycles(true);
  std::stable_sort(ca.begin(), ca.end(), by_length);
  std::stable_sort(cb.begin(), cb.end(), by_length);
  std::vector<Point> w(a.degree());
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < ca[i].size(); ++j) w[cb[i][j]] = ca[i][j];
  return Perm(std::move(w));
}

std::optional<Perm> conjugacy_witness(const PermGroup& G, const Perm& a, const Perm& b,
                                      std::size_t cap) {
  if (!G.contains(a) || !G.contains(b))
    throw PreconditionError("conjugacy test on elements outside the group");
  if (G.is_full_symmetric()) return symmetric_conjugator(a, b);
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  for (const Perm& g : G.elements(cap))
    if (conjugate(a, g) == b) return g;
  return std::nullopt;
}

std::vector<Perm> greedy_generators(std::size_t degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> generated{Perm(degree)};
  for (const Perm& g : elements) {
    if (generated.count(g)) continue;
    gens.push_back(g);
    auto closure = enumerate_closure(degree, gens, elements.size() + 1);
    if (!closure) throw InternalError("element list is not closed under multiplication");
    generated.insert(closure->begin(), closure->end());
  }
  return gens;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const Perm& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

}  // namespace ultrahom
