#include <algorithm>
#include <map>
#include <numeric>

#include "ultrahom/amalgam.hpp"
#include "ultrahom/centralizer.hpp"
#include "ultrahom/error.hpp"
#include "ultrahom/hall.hpp"
#include "ultrahom/tower.hpp"

namespace ultrahom {

namespace {

void require_upper_level(const Tower& tower, std::size_t n) {
  if (n >= tower.max_level())
    throw InputError("level " + std::to_string(n) + " has no level above it in this tower");
}

std::vector<std::uint64_t> divisors(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= k; ++d)
    if (k % d == 0) out.push_back(d);
  return out;
}

/// Splits `count` into parts drawn from `allowed` (sorted descending),
/// preferring large parts. Empty if impossible.
std::optional<std::vector<std::uint64_t>> split_into_parts(std::size_t count,
                                                           const std::vector<std::uint64_t>& allowed) {
  std::vector<std::int64_t> choice(count + 1, -1);
  choice[0] = 0;
  for (std::size_t s = 1; s <= count; ++s)
    for (std::size_t i = 0; i < allowed.size(); ++i)
      if (allowed[i] <= s && choice[s - allowed[i]] >= 0) {
        choice[s] = static_cast<std::int64_t>(i);
        break;
      }
  if (choice[count] < 0) return std::nullopt;
  std::vector<std::uint64_t> parts;
  for (std::size_t s = count; s > 0; s -= parts.back()) parts.push_back(allowed[choice[s]]);
  return parts;
}

/// A k-th root of x in Sym(deg x), or nothing.
std::optional<NthRoot> root_in_symmetric(const Perm& x, std::uint64_t k) {
  std::map<std::size_t, std::vector<std::vector<Point>>> by_length;
  for (auto& c : x.cycles(true)) by_length[c.size()].push_back(std::move(c));
  std::vector<Point> img(x.degree());
  NthRoot root;
  root.k = k;
  const auto ds = divisors(k);
  for (const auto& [c, cycles] : by_length) {
    std::vector<std::uint64_t> allowed;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
      if (std::gcd<std::uint64_t>(c, k / *it) == 1) allowed.push_back(*it);
    auto parts = split_into_parts(cycles.size(), allowed);
    if (!parts) return std::nullopt;
    std::size_t next = 0;
    for (std::uint64_t d : *parts) {
      const std::size_t len = c * d;
      std::vector<Point> cyc(len);
      for (std::size_t r = 0; r < d; ++r) {
        Point p = cycles[next + r][0];
        for (std::size_t j = 0; j < c; ++j, p = x(p)) cyc[(r + j * k) % len] = p;
      }
      for (std::size_t i = 0; i < len; ++i) img[cyc[i]] = cyc[(i + 1) % len];
      root.cycle_lengths.push_back(len);
      next += d;
    }
  }
  root.h = Perm::unchecked(std::move(img));
  return root;
}

}  // namespace

WitnessCertificate inner_uh_witness(const Tower& tower, std::size_t n, const PartialAutomorphism& p) {
  require_upper_level(tower, n);
  const FiniteGroup& G = tower.finite(n);
  if (p.ambient.order() != G.order()) throw InputError("partial automorphism is not over level " + std::to_string(n));
  Caps caps;
  caps.degree = std::max(caps.degree, G.order());
  WitnessCertificate cert = hall_witness(regular_representation(G, caps), p);
  cert.ambient = tower.level(n + 1).group;
  cert.tag = "inner-uh";
  if (!cert.verify()) throw InternalError("inner ultrahomogeneity witness fails its equations");
  return cert;
}

WitnessCertificate conjugacy_witness_same_order(const Tower& tower, std::size_t n, const Perm& a, const Perm& b) {
  require_upper_level(tower, n);
  if (a.order() != b.order())
    throw InputError("elements have orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  WitnessCertificate cert;
  cert.ambient = tower.level(n + 1).group;
  cert.tag = "conjugacy";
  Perm ua = tower.up(n, a), ub = tower.up(n, b);
  if (a == b) {
    cert.witness = Perm(ua.degree());
  } else {
    auto w = symmetric_conjugator(ua, ub);
    if (!w) throw InternalError("regular images of equal-order elements have different cycle types");
    cert.witness = *w;
  }
  cert.equations.emplace_back(ua, ub);
  if (!cert.verify()) throw InternalError("conjugacy witness fails its equation");
  return cert;
}

NthRoot nth_root(const Tower& tower, std::size_t n, const Perm& g, std::uint64_t k) {
  if (k == 0) throw InputError("root exponent must be positive");
  tower.index_of(n, g);
  const std::uint64_t m = g.order();
  const std::size_t top_degree = tower.level(tower.max_level()).group.degree();
  if (k > top_degree / m)
    throw CapExceeded("k * ord(g) = " + std::to_string(k) + " * " + std::to_string(m) + " exceeds " +
                      std::to_string(top_degree));
  if (k == 1) {
    NthRoot r;
    r.level = n;
    r.h = g;
    r.g_image = g;
    for (const auto& c : g.cycles(true)) r.cycle_lengths.push_back(c.size());
    return r;
  }
  for (std::size_t L = n; L <= tower.max_level(); ++L) {
    Perm x = tower.lift(n, L, g);
    auto r = root_in_symmetric(x, k);
    if (!r) continue;
    if (r->h.pow(static_cast<long long>(k)) != x) throw InternalError("constructed root fails h^k = g");
    r->level = L;
    r->g_image = std::move(x);
    return *r;
  }
  throw PreconditionError("no root of degree k = " + std::to_string(k) + " for an element of order " + std::to_string(m) +
                          " up to level " + std::to_string(tower.max_level()));
}

EscapeWitness escape_witness(const Tower& tower, std::size_t n, const std::vector<Perm>& A0, const Perm& b,
                             const Caps& caps) {
  const FiniteGroup& G = tower.finite(n);
  std::vector<Elem> gens;
  for (const Perm& a : A0) gens.push_back(tower.index_of(n, a));
  const Elem bi = tower.index_of(n, b);
  EscapeWitness out;
  out.subgroup = G.generate(gens);
  if (std::binary_search(out.subgroup.begin(), out.subgroup.end(), bi))
    throw PreconditionError("b lies in the subgroup generated by A0");

  GroupHomomorphism inc = subgroup_inclusion(G, out.subgroup, "<A0>");
  AmalgamResult am = neumann_amalgam(inc.source, G, G, inc, inc, caps);
  const std::size_t H = out.subgroup.size(), S = G.order() / H;
  out.degree = am.embed_B.degree();
  if (out.degree != H * S * S) throw InternalError("unexpected permutational product degree");

  std::vector<Point> swap(out.degree);
  for (std::size_t a = 0; a < H; ++a)
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t t = 0; t < S; ++t) swap[(a * S + s) * S + t] = static_cast<Point>((a * S + t) * S + s);

  out.b_image = am.embed_B(bi);
  out.b_twin = am.embed_C(bi);
  WitnessCertificate& cert = out.certificate;
  cert.ambient = PermGroup::symmetric(out.degree);
  cert.witness = Perm::unchecked(std::move(swap));
  cert.tag = "escape";
  for (Elem a : gens) cert.equations.emplace_back(am.embed_B(a), am.embed_B(a));
  cert.equations.emplace_back(out.b_image, out.b_twin);
  if (!cert.verify()) throw InternalError("coordinate swap fails the escape equations");
  if (out.b_twin == out.b_image) throw InternalError("b coincides with its twin");
  return out;
}

}  // namespace ultrahom
