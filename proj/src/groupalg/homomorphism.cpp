#include "ultrahom/homomorphism.hpp"

#include <algorithm>
#include <unordered_map>

namespace ultrahom {

namespace {

// Extends gens[i] -> images[i] to a map on ⟨gens⟩ by walking the Cayley
// graph; false if two paths to the same element disagree.
bool extend_images(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Elem>& gens,
                   const std::vector<Elem>& images, std::vector<Elem>& map,
                   std::vector<Elem>& reached) {
  map.assign(src.order(), kNoImage);
  reached.assign(1, 0);
  map[0] = 0;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    Elem x = reached[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Elem y = src.mul(x, gens[g]);
      Elem fy = dst.mul(map[x], images[g]);
      if (map[y] == kNoImage) {
        map[y] = fy;
        reached.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

void enumerate_isomorphisms(const FiniteGroup& src, const std::vector<Elem>& H,
                            const FiniteGroup& dst, const std::vector<Elem>& K,
                            const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (H.size() != K.size()) return;
  std::vector<Elem> gens = src.generating_set(H);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem k : K)
      if (dst.element_order(k) == src.element_order(gens[i])) candidates[i].push_back(k);
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map, reached, compact(H.size());
  std::vector<char> hit(dst.order());
  bool keep_going = true;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (!keep_going) return;
    if (depth == gens.size()) {
      if (!extend_images(src, dst, gens, images, map, reached)) return;
      std::fill(hit.begin(), hit.end(), 0);
      for (Elem x : reached) {
        if (hit[map[x]]) return;
        hit[map[x]] = 1;
      }
      for (std::size_t i = 0; i < H.size(); ++i) compact[i] = map[H[i]];
      keep_going = visit(compact);
      return;
    }
    for (Elem c : candidates[depth]) {
      images[depth] = c;
      self(self, depth + 1);
      if (!keep_going) return;
    }
  };
  recurse(recurse, 0);
}

std::string format_word(const std::vector<int>& forward, const std::vector<int>& inverted) {
  std::string out;
  auto add = [&](const std::string& letter) {
    if (!out.empty()) out += '*';
    out += letter;
  };
  for (int g : forward) add("x" + std::to_string(g + 1));
  for (auto it = inverted.rbegin(); it != inverted.rend(); ++it)
    add("x" + std::to_string(*it + 1) + "^-1");
  return out.empty() ? "1" : out;
}

}  // namespace

bool GroupHomomorphism::is_injective() const {
  std::vector<char> hit(target.order(), 0);
  for (Elem y : map) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool GroupHomomorphism::is_homomorphism() const {
  for (Elem a = 0; a < source.order(); ++a)
    for (Elem b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
  return true;
}

GroupHomomorphism GroupHomomorphism::from_generator_images(const FiniteGroup& source,
                                                           const FiniteGroup& target,
                                                           const std::vector<Elem>& gens,
                                                           const std::vector<Elem>& images) {
  if (gens.size() != images.size()) throw InputError("one image is needed per generator");
  std::vector<Elem> map, reached;
  if (!extend_images(source, target, gens, images, map, reached))
    throw InputError("generator images do not define a homomorphism");
  if (reached.size() != source.order()) throw InputError("generators do not generate the source");
  return {source, target, std::move(map)};
}

bool PartialAutomorphism::is_identity() const {
  for (Elem x : domain)
    if (extension[x] != x) return false;
  return true;
}

GroupHomomorphism subgroup_inclusion(const FiniteGroup& G, const std::vector<Elem>& H, std::string name) {
  if (H.empty() || H.front() != 0) throw InputError("a subgroup list must start with the identity");
  std::vector<Elem> pos(G.order(), kNoImage);
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (H[i] >= G.order()) throw InputError("subgroup element outside the group");
    pos[H[i]] = static_cast<Elem>(i);
  }
  std::vector<std::vector<Elem>> table(H.size(), std::vector<Elem>(H.size()));
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = 0; j < H.size(); ++j) {
      Elem k = pos[G.mul(H[i], H[j])];
      if (k == kNoImage) throw InputError("element list is not a subgroup");
      table[i][j] = k;
    }
  return {FiniteGroup::from_table(table, std::move(name)), G, H};
}

PartialAutomorphism validate_partial_automorphism(const FiniteGroup& G,
                                                  const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = G.order();
  std::vector<Elem> as, bs;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("paired element outside the group");
    as.push_back(a);
    bs.push_back(b);
  }
  struct Node {
    Elem x, y;
    std::size_t parent;
    int gen;
  };
  std::vector<Node> nodes{{0, 0, 0, -1}};
  std::vector<std::size_t> by_first(n, SIZE_MAX), by_second(n, SIZE_MAX);
  by_first[0] = by_second[0] = 0;
  auto word_to = [&](std::size_t i) {
    std::vector<int> w;
    for (; nodes[i].gen >= 0; i = nodes[i].parent) w.push_back(nodes[i].gen);
    std::reverse(w.begin(), w.end());
    return w;
  };
  // Words reaching a node: the node's parent path plus one more letter.
  auto word_via = [&](std::size_t parent, int gen) {
    auto w = word_to(parent);
    w.push_back(gen);
    return w;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t g = 0; g < pairs.size(); ++g) {
      Elem x = G.mul(nodes[i].x, as[g]);
      Elem y = G.mul(nodes[i].y, bs[g]);
      std::size_t f = by_first[x], s = by_second[y];
      if (f != SIZE_MAX && nodes[f].y == y) continue;  // already present
      if (f != SIZE_MAX) {
        std::string w = format_word(word_to(f), word_via(i, int(g)));
        throw RejectedPairing("relation " + w + " = 1 holds among the a_i but not among the b_i",
                              w, true);
      }
      if (s != SIZE_MAX) {
        std::string w = format_word(word_to(s), word_via(i, int(g)));
        throw RejectedPairing("relation " + w + " = 1 holds among the b_i but not among the a_i",
                              w, false);
      }
      by_first[x] = by_second[y] = nodes.size();
      nodes.push_back({x, y, i, int(g)});
    }
  }
  PartialAutomorphism p{G, pairs, {}, {}, std::vector<Elem>(n, kNoImage)};
  for (const Node& node : nodes) {
    p.domain.push_back(node.x);
    p.range.push_back(node.y);
    p.extension[node.x] = node.y;
  }
  std::sort(p.domain.begin(), p.domain.end());
  std::sort(p.range.begin(), p.range.end());
  return p;
}

void for_each_subgroup_isomorphism(const FiniteGroup& G, const std::vector<Elem>& H,
                                   const std::vector<Elem>& K,
                                   const std::function<bool(const std::vector<Elem>&)>& visit) {
  enumerate_isomorphisms(G, H, G, K, visit);
}

std::vector<std::vector<Elem>> subgroup_isomorphisms(const FiniteGroup& G,
                                                     const std::vector<Elem>& H,
                                                     const std::vector<Elem>& K) {
  std::vector<std::vector<Elem>> out;
  enumerate_isomorphisms(G, H, G, K, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Elem> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
  std::vector<Elem> all_g(G.order()), all_h(H.order());
  for (Elem i = 0; i < G.order(); ++i) all_g[i] = i;
  for (Elem i = 0; i < H.order(); ++i) all_h[i] = i;
  std::vector<Elem> found;
  enumerate_isomorphisms(G, all_g, H, all_h, [&](const std::vector<Elem>& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& G) {
  std::vector<Elem> all(G.order());
  for (Elem i = 0; i < G.order(); ++i) all[i] = i;
  return subgroup_isomorphisms(G, all, all);
}

}  // namespace ultrahom
