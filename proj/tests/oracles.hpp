#pragma once

// Deliberately naive reference computations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ultrahom/finite_group.hpp"

namespace oracle {

using ultrahom::Elem;
using ultrahom::FiniteGroup;

inline std::vector<Elem> closure(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gens) {
      Elem y = G.mul(out[i], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every isomorphism H -> K (maps indexed by element of G, kNoImage-free
/// only on H), by trying every tuple of images of a greedy generating set.
inline std::vector<std::vector<Elem>> isomorphisms(const FiniteGroup& G, const std::vector<Elem>& H,
                                                   const std::vector<Elem>& K) {
  std::vector<std::vector<Elem>> out;
  if (H.size() != K.size()) return out;
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem h : H)
    if (!std::binary_search(span.begin(), span.end(), h)) {
      gens.push_back(h);
      span = closure(G, gens);
    }
  const Elem none = ~Elem{0};
  std::vector<Elem> img(gens.size());
  auto attempt = [&]() {
    std::vector<Elem> map(G.order(), none);
    map[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Elem x = G.mul(queue[i], gens[g]);
        Elem y = G.mul(map[queue[i]], img[g]);
        if (map[x] == none) {
          map[x] = y;
          queue.push_back(x);
        } else if (map[x] != y) {
          return;
        }
      }
    std::vector<char> hit(G.order(), 0);
    for (Elem h : H) {
      if (!std::binary_search(K.begin(), K.end(), map[h]) || hit[map[h]]) return;
      hit[map[h]] = 1;
    }
    for (Elem a : H)
      for (Elem b : H)
        if (map[G.mul(a, b)] != G.mul(map[a], map[b])) return;
    out.push_back(map);
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) return attempt();
    for (Elem k : K) {
      img[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Invariant factors (ascending) of an abelian group from the orders of
/// its elements: the number of cyclic p-factors of order >= p^j is
/// log_p #{x : ord(x) | p^j} - log_p #{x : ord(x) | p^(j-1)}.
inline std::vector<std::uint64_t> invariants_from_orders(const std::vector<std::uint64_t>& orders) {
  std::uint64_t n = orders.size();
  std::vector<std::vector<std::uint64_t>> by_rank;  // by_rank[i] = factors of the i-th largest
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime &= p % d != 0;
    if (!prime || n % p) continue;
    auto log_count = [&](std::uint64_t q) {
      std::uint64_t c = 0;
      for (auto o : orders) c += q % o == 0;
      int l = 0;
      while (c > 1) c /= p, ++l;
      return l;
    };
    std::vector<int> at_least;  // at_least[j-1] = #factors of order >= p^j
    std::uint64_t q = 1;
    int prev = 0;
    while (true) {
      q *= p;
      int l = log_count(q);
      if (l == prev) break;
      at_least.push_back(l - prev);
      prev = l;
    }
    if (at_least.empty()) continue;
    if (by_rank.size() < static_cast<std::size_t>(at_least[0])) by_rank.resize(at_least[0]);
    for (int i = 0; i < at_least[0]; ++i) {
      std::uint64_t pe = 1;
      for (int c : at_least)
        if (c > i) pe *= p;
      by_rank[i].push_back(pe);
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& f : by_rank) {
    std::uint64_t d = 1;
    for (auto x : f) d *= x;
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
