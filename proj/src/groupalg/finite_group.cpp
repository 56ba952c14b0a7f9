#include "ultrahom/finite_group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "ultrahom/error.hpp"

namespace ultrahom {

FiniteGroup FiniteGroup::finish(Data d) {
  const std::size_t n = d.n;
  d.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.table[a * n + b] == 0) {
        d.inverse[a] = static_cast<Elem>(b);
        break;
      }
  d.orders.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0) {
      x = d.table[x * n + a];
      ++k;
    }
    d.orders[a] = k;
  }
  if (!d.perms.empty()) {
    d.perm_index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.perm_index.emplace_back(d.perms[i], static_cast<Elem>(i));
    std::sort(d.perm_index.begin(), d.perm_index.end());
  }
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("a group table needs at least one element");
  Data d;
  d.n = n;
  d.name = std::move(name);
  d.table.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (Elem x : row) {
      if (x >= n) throw InputError("group table entry out of range");
      d.table.push_back(x);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (d.table[x] != x || d.table[x * n] != x)
      throw InputError("element 0 is not the identity of the table");
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[d.table[a * n + b]]) throw InputError("group table row is not a permutation");
      seen[d.table[a * n + b]] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[d.table[b * n + a]]) throw InputError("group table column is not a permutation");
      seen[d.table[b * n + a]] = 1;
    }
  }
  auto mul = [&](std::size_t a, std::size_t b) { return std::size_t(d.table[a * n + b]); };
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw InputError("group table is not associative at (" + std::to_string(a) + ", " +
                       std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 200'000; ++i) check(rng() % n, rng() % n, rng() % n);
  }
  return finish(std::move(d));
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Perm>& gens,
                                           std::size_t cap, std::string name) {
  auto elements = enumerate_closure(degree, gens, cap);
  if (!elements)
    throw CapExceeded("permutation group has more than " + std::to_string(cap) + " elements");
  return from_elements(std::move(*elements), std::move(name));
}

FiniteGroup FiniteGroup::from_elements(std::vector<Perm> elements, std::string name) {
  const std::size_t n = elements.size();
  if (n == 0 || !elements.front().is_identity())
    throw InputError("element list must start with the identity");
  std::unordered_map<Perm, Elem, PermHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], static_cast<Elem>(i)).second)
      throw InputError("element list has duplicates");
  Data d;
  d.n = n;
  d.name = std::move(name);
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(compose(elements[a], elements[b]));
      if (it == index.end()) throw InputError("element list is not closed under composition");
      d.table[a * n + b] = it->second;
    }
  d.perms = std::move(elements);
  return finish(std::move(d));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  Data d;
  d.n = n;
  d.name = "Z" + std::to_string(n);
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.table[a * n + b] = static_cast<Elem>((a + b) % n);
  return finish(std::move(d));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  long long o = static_cast<long long>(element_order(a));
  k = ((k % o) + o) % o;
  Elem result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  const auto gens = generating_set();
  for (Elem g : gens)
    for (Elem h : gens)
      if (!commute(g, h)) return false;
  return true;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  Data d = *d_;
  d.name = std::move(name);
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

std::vector<Elem> FiniteGroup::generate(const std::vector<Elem>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gens) {
      Elem y = mul(out[i], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FiniteGroup::generating_set() const {
  std::vector<Elem> all(order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return generating_set(all);
}

std::vector<Elem> FiniteGroup::generating_set(const std::vector<Elem>& subgroup) const {
  std::vector<Elem> gens;
  std::size_t have = 1;
  while (have < subgroup.size()) {
    Elem best = 0;
    std::size_t best_size = have;
    for (Elem x : subgroup) {
      auto trial = gens;
      trial.push_back(x);
      std::size_t s = generate(trial).size();
      if (s > best_size) {
        best = x;
        best_size = s;
      }
    }
    gens.push_back(best);
    have = best_size;
  }
  return gens;
}

std::optional<Elem> FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(d_->perm_index.begin(), d_->perm_index.end(), p,
                             [](const auto& entry, const Perm& q) { return entry.first < q; });
  if (it == d_->perm_index.end() || it->first != p) return std::nullopt;
  return it->second;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> rows(order());
  for (std::size_t a = 0; a < order(); ++a)
    rows[a].assign(d_->table.begin() + static_cast<long>(a * order()),
                   d_->table.begin() + static_cast<long>((a + 1) * order()));
  return rows;
}

DirectProduct direct_product(const FiniteGroup& G, const FiniteGroup& H, std::size_t cap) {
  const std::size_t ng = G.order(), nh = H.order();
  if (ng * nh > cap)
    throw CapExceeded("direct product of order " + std::to_string(ng * nh) + " exceeds cap");
  std::vector<std::vector<Elem>> table(ng * nh, std::vector<Elem>(ng * nh));
  for (std::size_t a = 0; a < ng * nh; ++a)
    for (std::size_t b = 0; b < ng * nh; ++b)
      table[a][b] = static_cast<Elem>(G.mul(Elem(a / nh), Elem(b / nh)) * nh +
                                      H.mul(Elem(a % nh), Elem(b % nh)));
  std::string name;
  if (!G.name().empty() && !H.name().empty()) name = G.name() + "x" + H.name();
  DirectProduct out{FiniteGroup::from_table(table, name), {}, {}, nh};
  for (std::size_t g = 0; g < ng; ++g) out.embed_first.push_back(static_cast<Elem>(g * nh));
  for (std::size_t h = 0; h < nh; ++h) out.embed_second.push_back(static_cast<Elem>(h));
  return out;
}

FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& K,
                               const std::vector<Elem>& k_generators,
                               const std::vector<std::vector<Elem>>& actions, std::string name) {
  const std::size_t nn = N.order(), nk = K.order();
  if (k_generators.size() != actions.size())
    throw InputError("one action is needed per generator of K");
  for (const auto& act : actions) {
    if (act.size() != nn) throw InputError("action is not a map on N");
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        if (act[N.mul(a, b)] != N.mul(act[a], act[b]))
          throw InputError("action is not a homomorphism of N");
  }
  std::vector<std::vector<Elem>> phi(nk);
  phi[0].resize(nn);
  for (Elem a = 0; a < nn; ++a) phi[0][a] = a;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem k = queue[i];
    for (std::size_t g = 0; g < k_generators.size(); ++g) {
      Elem next = K.mul(k, k_generators[g]);
      std::vector<Elem> composed(nn);
      for (Elem a = 0; a < nn; ++a) composed[a] = phi[k][actions[g][a]];
      if (phi[next].empty()) {
        phi[next] = std::move(composed);
        queue.push_back(next);
      } else if (phi[next] != composed) {
        throw InputError("actions do not define a homomorphism into Aut(N)");
      }
    }
  }
  if (queue.size() != nk) throw InputError("k_generators do not generate K");
  std::vector<std::vector<Elem>> table(nn * nk, std::vector<Elem>(nn * nk));
  for (std::size_t x = 0; x < nn * nk; ++x)
    for (std::size_t y = 0; y < nn * nk; ++y) {
      Elem n1 = Elem(x / nk), k1 = Elem(x % nk), n2 = Elem(y / nk), k2 = Elem(y % nk);
      table[x][y] = static_cast<Elem>(N.mul(n1, phi[k1][n2]) * nk + K.mul(k1, k2));
    }
  return FiniteGroup::from_table(table, std::move(name));
}

FiniteGroup metacyclic(std::size_t M, std::size_t m, std::size_t r, std::size_t t,
                       std::string name) {
  if (M == 0 || m == 0) throw InputError("metacyclic parameters must be positive");
  std::vector<std::size_t> rpow(m + 1, 1 % M);
  for (std::size_t j = 1; j <= m; ++j) rpow[j] = rpow[j - 1] * r % M;
  if (rpow[m] != 1 % M || (r * t) % M != t % M)
    throw InputError("metacyclic parameters violate r^m = 1 or r t = t");
  const std::size_t n = M * m;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t i = x / m, j = x % m, k = y / m, l = y % m;
      std::size_t e = i + k * rpow[j] + (j + l >= m ? t : 0);
      table[x][y] = static_cast<Elem>((e % M) * m + (j + l) % m);
    }
  return FiniteGroup::from_table(table, std::move(name));
}

std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> work{{0}};
  found.insert({0});
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<Elem> H = work[i];
    std::vector<Elem> gens = G.generating_set(H);
    std::vector<char> in(G.order(), 0);
    for (Elem h : H) in[h] = 1;
    for (Elem x = 0; x < G.order(); ++x) {
      if (in[x]) continue;
      auto trial = gens;
      trial.push_back(x);
      auto J = G.generate(trial);
      for (Elem y : J) in[y] = 1;
      if (found.insert(J).second) work.push_back(std::move(J));
    }
  }
  std::vector<std::vector<Elem>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::uint64_t> abelian_invariants_from_orders(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  std::map<std::uint64_t, std::vector<std::uint64_t>> primary;  // p -> prime powers, descending
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p) continue;
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // at_least[j] = number of cyclic factors of order >= p^j, read off from
    // #{x : x^(p^j) = 1} = p^(sum_i min(j, e_i)).
    std::vector<std::size_t> at_least(e + 2, 0);
    std::size_t prev_log = 0;
    std::uint64_t pj = 1;
    for (std::size_t j = 1; j <= e; ++j) {
      pj *= p;
      std::uint64_t count = 0;
      for (std::uint64_t o : orders)
        if (pj % o == 0) ++count;
      std::size_t lg = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++lg;
      at_least[j] = lg - prev_log;
      prev_log = lg;
    }
    auto& list = primary[p];
    for (std::size_t j = e; j >= 1; --j) {
      std::size_t exact = at_least[j] - at_least[j + 1];
      std::uint64_t q = 1;
      for (std::size_t i = 0; i < j; ++i) q *= p;
      for (std::size_t c = 0; c < exact; ++c) list.push_back(q);
    }
  }
  std::size_t k = 0;
  for (const auto& [p, list] : primary) k = std::max(k, list.size());
  std::vector<std::uint64_t> factors(k, 1);
  for (const auto& [p, list] : primary)
    for (std::size_t i = 0; i < list.size(); ++i) factors[k - 1 - i] *= list[i];
  return factors;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& G) {
  if (!G.is_abelian()) throw InputError("abelian invariants of a non-abelian group");
  std::vector<std::uint64_t> orders(G.order());
  for (Elem x = 0; x < G.order(); ++x) orders[x] = G.element_order(x);
  return abelian_invariants_from_orders(orders);
}

std::vector<Elem> center(const FiniteGroup& G) {
  std::vector<Elem> gens = G.generating_set();
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x) {
    bool central = true;
    for (Elem g : gens) central = central && G.commute(x, g);
    if (central) out.push_back(x);
  }
  return out;
}

}  // namespace ultrahom
