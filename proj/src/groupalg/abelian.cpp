#include "ultrahom/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ultrahom/error.hpp"

namespace ultrahom {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Turns any list of cyclic orders into invariant factors (ascending, 1s
// dropped) through the primary decomposition.
std::vector<std::int64_t> to_invariant_factors(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> primary;
  for (std::int64_t m : orders)
    for (auto [p, e] : factorize(m)) {
      std::int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      primary[p].push_back(q);
    }
  std::size_t k = 0;
  for (auto& [p, list] : primary) {
    std::sort(list.rbegin(), list.rend());
    k = std::max(k, list.size());
  }
  std::vector<std::int64_t> factors(k, 1);
  for (const auto& [p, list] : primary)
    for (std::size_t i = 0; i < list.size(); ++i) factors[k - 1 - i] *= list[i];
  return factors;
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

}  // namespace

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<std::int64_t> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw InputError("invariant factors must be at least 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw InputError("invariant factors must form a divisor chain");
  }
  AbelianGroup g;
  g.moduli_ = std::move(factors);
  return g;
}

AbelianGroup AbelianGroup::product(std::vector<std::int64_t> moduli) {
  for (std::int64_t m : moduli)
    if (m < 1) throw InputError("cyclic orders must be positive");
  AbelianGroup g;
  g.moduli_ = std::move(moduli);
  return g;
}

AbelianGroup AbelianGroup::normalized(const std::vector<std::int64_t>& moduli) {
  for (std::int64_t m : moduli)
    if (m < 1) throw InputError("cyclic orders must be positive");
  return from_invariant_factors(to_invariant_factors(moduli));
}

std::vector<std::int64_t> AbelianGroup::invariant_factors() const {
  return to_invariant_factors(moduli_);
}

bool AbelianGroup::is_normal_form() const { return moduli_ == invariant_factors(); }

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (std::int64_t m : moduli_) n *= static_cast<std::uint64_t>(m);
  return n;
}

std::int64_t AbelianGroup::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t m : moduli_) e = std::lcm(e, m);
  return e;
}

std::uint64_t AbelianGroup::index(const AbVec& v) const {
  if (v.size() != moduli_.size()) throw InputError("element has the wrong number of coordinates");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(mod(v[i], moduli_[i]));
  return idx;
}

AbVec AbelianGroup::element(std::uint64_t index) const {
  AbVec v(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    v[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(moduli_[i]));
    index /= static_cast<std::uint64_t>(moduli_[i]);
  }
  return v;
}

AbVec AbelianGroup::reduce(AbVec a) const {
  if (a.size() != moduli_.size()) throw InputError("element has the wrong number of coordinates");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], moduli_[i]);
  return a;
}

AbVec AbelianGroup::add(const AbVec& a, const AbVec& b) const {
  AbVec c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(a[i] + b[i], moduli_[i]);
  return c;
}

AbVec AbelianGroup::neg(const AbVec& a) const { return scale(a, -1); }

AbVec AbelianGroup::scale(const AbVec& a, std::int64_t k) const {
  AbVec c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(mod(a[i], moduli_[i]) * mod(k, moduli_[i]), moduli_[i]);
  return c;
}

AbVec AbelianGroup::basis(std::size_t i) const {
  AbVec v = zero();
  v[i] = 1 % moduli_[i];
  return v;
}

std::int64_t AbelianGroup::element_order(const AbVec& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    o = std::lcm(o, moduli_[i] / std::gcd(mod(a[i], moduli_[i]), moduli_[i]));
  return o;
}

std::vector<std::uint64_t> AbelianGroup::span(const std::vector<AbVec>& gens) const {
  std::set<std::uint64_t> seen{0};
  std::vector<AbVec> queue{zero()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const AbVec& g : gens) {
      AbVec y = add(queue[i], g);
      if (seen.insert(index(y)).second) queue.push_back(std::move(y));
    }
  return {seen.begin(), seen.end()};
}

FiniteGroup AbelianGroup::to_finite_group() const {
  const std::uint64_t n = order();
  std::vector<AbVec> elems(n);
  for (std::uint64_t i = 0; i < n; ++i) elems[i] = element(i);
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      table[a][b] = static_cast<Elem>(index(add(elems[a], elems[b])));
  return FiniteGroup::from_table(table, to_string());
}

std::string AbelianGroup::to_string() const {
  if (moduli_.empty()) return "1";
  std::string s;
  for (std::int64_t m : moduli_) {
    if (!s.empty()) s += 'x';
    s += "Z" + std::to_string(m);
  }
  return s;
}

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return to_invariant_factors(diag);
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        clean = clean && a[t][c] == 0;
      }
      if (clean) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return to_invariant_factors(diag);
}

std::vector<std::int64_t> quotient_invariants(const AbelianGroup& B, const std::vector<AbVec>& gens) {
  const std::size_t k = B.rank();
  std::vector<std::vector<std::int64_t>> rel;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(k, 0);
    row[i] = B.moduli()[i];
    rel.push_back(row);
  }
  for (const AbVec& g : gens) rel.push_back(B.reduce(g));
  if (k == 0) return {};
  return smith_diagonal(rel);
}

QuotientSubgroup abelian_quotient_subgroup(const AbelianGroup& B, const std::vector<AbVec>& A_gens) {
  QuotientSubgroup out;
  out.invariant_factors = quotient_invariants(B, A_gens);
  const auto& e = out.invariant_factors;
  std::vector<AbVec> chosen(e.size());
  const std::uint64_t n = B.order();
  // Largest factor first; each new element must be independent of the
  // ones already chosen.
  auto search = [&](auto&& self, std::size_t left, std::size_t span_size) -> bool {
    if (left == 0) return true;
    std::size_t j = left - 1;
    for (std::uint64_t x = 0; x < n; ++x) {
      AbVec v = B.element(x);
      if (B.element_order(v) != e[j]) continue;
      std::vector<AbVec> gens(chosen.begin() + static_cast<long>(left), chosen.end());
      gens.push_back(v);
      if (B.span(gens).size() != span_size * static_cast<std::size_t>(e[j])) continue;
      chosen[j] = v;
      if (self(self, j, span_size * static_cast<std::size_t>(e[j]))) return true;
    }
    return false;
  };
  if (!search(search, e.size(), 1))
    throw InternalError("no subgroup isomorphic to the quotient was found");
  out.generators = chosen;
  out.elements = B.span(chosen);
  return out;
}

bool is_automorphism(const AbelianGroup& G, const std::vector<std::uint64_t>& table) {
  const std::uint64_t n = G.order();
  if (table.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::uint64_t y : table) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t i = 0; i < G.rank(); ++i) {
    AbVec ei = G.basis(i);
    AbVec si = G.element(table[G.index(ei)]);
    for (std::uint64_t x = 0; x < n; ++x) {
      AbVec v = G.element(x);
      if (table[G.index(G.add(v, ei))] != G.index(G.add(G.element(table[x]), si))) return false;
    }
  }
  return true;
}

AbelianAutomorphism odd_abelian_fixing_automorphism(const AbelianGroup& G, const AbVec& g_in) {
  const std::uint64_t n = G.order();
  if (n % 2 == 0) throw PreconditionError("group order must be odd");
  AbVec g = G.reduce(g_in);
  const std::uint64_t gi = G.index(g);
  const std::int64_t og = G.element_order(g);
  if (static_cast<std::uint64_t>(og) == n) throw PreconditionError("g generates the group");

  auto accept = [&](const std::vector<std::uint64_t>& table) {
    if (table[gi] != gi || !is_automorphism(G, table)) return false;
    for (std::uint64_t x = 0; x < n; ++x)
      if (table[x] != x) return true;
    return false;
  };

  if (og == G.exponent()) {
    // ⟨g⟩ is a direct factor: grow a complement greedily, then invert it.
    std::vector<std::uint64_t> cyclic = G.span({g});
    std::vector<AbVec> hgens;
    std::vector<std::uint64_t> H{0};
    for (std::uint64_t x = 1; x < n && H.size() * static_cast<std::uint64_t>(og) < n; ++x) {
      if (std::binary_search(H.begin(), H.end(), x)) continue;
      auto trial = hgens;
      trial.push_back(G.element(x));
      auto J = G.span(trial);
      std::vector<std::uint64_t> meet;
      std::set_intersection(J.begin(), J.end(), cyclic.begin(), cyclic.end(), std::back_inserter(meet));
      if (meet.size() == 1) {
        hgens = std::move(trial);
        H = std::move(J);
      }
    }
    if (H.size() * static_cast<std::uint64_t>(og) == n) {
      std::vector<std::uint64_t> table(n);
      for (std::int64_t a = 0; a < og; ++a)
        for (std::uint64_t h : H) {
          AbVec ag = G.scale(g, a), hv = G.element(h);
          table[G.index(G.add(ag, hv))] = G.index(G.add(ag, G.neg(hv)));
        }
      if (accept(table)) return {table, "complement inversion"};
    }
  } else {
    // Some prime p has a smaller p-part in ord(g) than in the exponent; act
    // on a cyclic factor Z/p^e by x -> (d+1)x, d the order of g's component.
    std::int64_t E = G.exponent();
    for (auto [p, e] : factorize(E)) {
      std::int64_t pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      if (og % pe == 0) continue;
      std::size_t coord = 0;
      while (G.moduli()[coord] % pe != 0) ++coord;
      std::int64_t m = G.moduli()[coord];
      std::int64_t rest = m / pe;
      std::int64_t u = 0;  // u ≡ 1 (mod p^e), u ≡ 0 (mod rest)
      for (std::int64_t t = 0; t < pe; ++t)
        if (mod(t * rest, pe) == 1) u = t * rest;
      std::int64_t g1 = mod(u * g[coord], m);
      std::int64_t d = m / std::gcd(g1, m);
      std::vector<std::uint64_t> table(n);
      for (std::uint64_t x = 0; x < n; ++x) {
        AbVec v = G.element(x);
        v[coord] = mod(v[coord] + mod(d * u, m) * v[coord], m);
        table[x] = G.index(v);
      }
      if (accept(table)) return {table, "power map on a cyclic p-factor"};
      break;
    }
  }

  // Exhaustive search over images of the coordinate generators.
  const std::size_t k = G.rank();
  std::vector<std::vector<std::uint64_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint64_t y = 0; y < n; ++y)
      if (G.moduli()[i] % G.element_order(G.element(y)) == 0) candidates[i].push_back(y);
  std::vector<std::uint64_t> images(k);
  std::vector<std::uint64_t> table(n);
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) {
      for (std::uint64_t x = 0; x < n; ++x) {
        AbVec v = G.element(x), img = G.zero();
        for (std::size_t j = 0; j < k; ++j) img = G.add(img, G.scale(G.element(images[j]), v[j]));
        table[x] = G.index(img);
      }
      return accept(table);
    }
    for (std::uint64_t c : candidates[i]) {
      images[i] = c;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return {table, "exhaustive search"};
  throw InternalError("no nontrivial automorphism fixing g was found");
}

std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  std::vector<std::vector<std::int64_t>> combos{{}};
  for (auto [p, e] : factorize(static_cast<std::int64_t>(n))) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& base : combos)
      for (const auto& part : partitions(e, e)) {
        auto c = base;
        for (int a : part) {
          std::int64_t q = 1;
          for (int i = 0; i < a; ++i) q *= p;
          c.push_back(q);
        }
        next.push_back(std::move(c));
      }
    combos = std::move(next);
  }
  std::vector<AbelianGroup> out;
  for (const auto& c : combos) out.push_back(AbelianGroup::normalized(c));
  return out;
}

}  // namespace ultrahom
