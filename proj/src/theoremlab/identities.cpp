#include <algorithm>
#include <random>
#include <unordered_map>

#include "ultrahom/abelian.hpp"
#include "ultrahom/error.hpp"
#include "ultrahom/hall.hpp"
#include "ultrahom/perm_json.hpp"
#include "ultrahom/theorems.hpp"

namespace ultrahom {

InnerUHResult check_inner_ultrahomogeneous(const FiniteGroup& G, std::size_t max_order) {
  if (G.order() > max_order)
    throw CapExceeded("inner ultrahomogeneity check is limited to order " + std::to_string(max_order));
  InnerUHResult out;
  auto subs = all_subgroups(G);
  for (const auto& H : subs) {
    auto gens = G.generating_set(H);
    std::vector<std::size_t> pos;
    for (Elem g : gens) pos.push_back(std::lower_bound(H.begin(), H.end(), g) - H.begin());
    for (const auto& K : subs) {
      if (K.size() != H.size()) continue;
      for_each_subgroup_isomorphism(G, H, K, [&](const std::vector<Elem>& f) {
        ++out.partial_automorphisms;
        for (Elem x = 0; x < G.order(); ++x) {
          bool ok = true;
          for (std::size_t i = 0; i < gens.size() && ok; ++i) ok = G.conj(gens[i], x) == f[pos[i]];
          if (ok) return true;
        }
        out.holds = false;
        std::vector<std::pair<Elem, Elem>> pairs;
        for (std::size_t i = 0; i < gens.size(); ++i) pairs.emplace_back(gens[i], f[pos[i]]);
        out.counterexample = std::move(pairs);
        return false;
      });
      if (!out.holds) return out;
    }
  }
  return out;
}

NCycleIdentity ncycle_identity_check(int n) {
  if (n < 3 || n > 12) throw InputError("n-cycle identity is checked for 3 <= n <= 12");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  std::vector<Point> first, second{static_cast<Point>(n - 1), static_cast<Point>(n)};
  for (int i = 0; i < n; ++i) first.push_back(static_cast<Point>(i));
  for (int i = n - 2; i >= 1; --i) second.push_back(static_cast<Point>(i));
  Perm a = Perm::from_cycles(d, {first}), b = Perm::from_cycles(d, {second});
  Perm rhs = Perm::from_cycles(d, {{0, 1}, {static_cast<Point>(n - 1), static_cast<Point>(n)}});
  return {n, compose(a, b) == rhs, compose(b, a) == rhs};
}

std::optional<std::vector<Perm>> conjugate_width_oracle(const PermGroup& G, const Perm& g, const Perm& h,
                                                        std::size_t max_width, std::size_t cap) {
  if (g.is_identity()) throw InputError("conjugate width needs a nontrivial element");
  if (!G.contains(g) || !G.contains(h)) throw InputError("g and h must lie in the group");
  auto elements = G.elements(cap);
  std::vector<Perm> cls;
  {
    std::unordered_map<Perm, char, PermHash> seen;
    for (const Perm& x : elements)
      if (seen.emplace(conjugate(g, x), 1).second) cls.push_back(conjugate(g, x));
  }
  // parent[y] = (x, c) with y = x·c.
  std::unordered_map<Perm, std::pair<Perm, Perm>, PermHash> parent;
  Perm id = G.identity();
  parent.emplace(id, std::pair{id, id});
  std::vector<Perm> frontier{id};
  auto unwind = [&](Perm y) {
    std::vector<Perm> out;
    while (y != id) {
      auto [x, c] = parent.at(y);
      out.push_back(c);
      y = x;
    }
    std::reverse(out.begin(), out.end());
    return out;
  };
  if (h.is_identity()) return std::vector<Perm>{};
  for (std::size_t w = 1; w <= max_width && !frontier.empty(); ++w) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& c : cls) {
        Perm y = compose(x, c);
        if (parent.emplace(y, std::pair{x, c}).second) {
          if (y == h) return unwind(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

namespace {

using Cycles = std::vector<std::vector<Point>>;

std::vector<std::pair<Point, Point>> transpositions(const Perm& r) {
  std::vector<std::pair<Point, Point>> out;
  for (const auto& c : r.cycles())
    if (c.size() == 2) out.emplace_back(c[0], c[1]);
  return out;
}

}  // namespace

OrderProduct order_product_check(int n, int m) {
  if (n < 2 || m < 1) throw InputError("order product needs n >= 2 and m >= 1");
  OrderProduct out;
  out.n = n;
  out.m = m;
  auto ncycle = [&](std::size_t degree) {
    std::vector<Point> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
    return Perm::from_cycles(degree, {c});
  };

  if (m == 1 || m == n) {
    out.degree = static_cast<std::size_t>(n);
    Perm x = ncycle(out.degree);
    out.factors = m == 1 ? std::vector<Perm>{x, x.inverse()} : std::vector<Perm>{x};
  } else {
    // Two disjoint m-cycles: an even permutation, so r1 and r2 share a parity.
    const std::size_t M = static_cast<std::size_t>(m);
    std::vector<Point> r1(2 * M), r2(2 * M), t(2 * M);
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < M; ++i) {
        r1[b * M + i] = static_cast<Point>(b * M + (M + 1 - i) % M);
        r2[b * M + i] = static_cast<Point>(b * M + (M - i) % M);
        t[b * M + i] = static_cast<Point>(b * M + (i + 1) % M);
      }
    auto inv1 = transpositions(Perm(r1)), inv2 = transpositions(Perm(r2));
    std::size_t next_point = 2 * M;
    if (inv1.size() % 2 == 1) {
      inv1.emplace_back(next_point, next_point + 1);
      inv2.emplace_back(next_point, next_point + 1);
      next_point += 2;
    }
    Cycles t_cycles = Perm(t).cycles();
    if (n == 2) {
      out.degree = next_point;
      for (const auto* inv : {&inv1, &inv2}) {
        if (inv->empty()) continue;
        Cycles cs;
        for (auto [a, b] : *inv) cs.push_back({a, b});
        out.factors.push_back(Perm::from_cycles(out.degree, cs));
      }
    } else {
      // (1,2,...,n)(n,n+1,n-1,...,2) = (1,2)(n,n+1), with 1,2,n,n+1 sent to
      // a,b,c,d and 3..n-1 to fresh points.
      std::vector<std::pair<Cycles, Cycles>> halves;
      for (const auto* inv : {&inv1, &inv2}) {
        if (inv->empty()) continue;
        Cycles xs, ys;
        for (std::size_t i = 0; i + 1 < inv->size(); i += 2) {
          auto [a, b] = (*inv)[i];
          auto [c, d] = (*inv)[i + 1];
          std::vector<Point> label(static_cast<std::size_t>(n) + 2);
          label[1] = a, label[2] = b, label[n] = c, label[n + 1] = d;
          for (int j = 3; j < n; ++j) label[j] = static_cast<Point>(next_point++);
          std::vector<Point> x, y{label[n], label[n + 1]};
          for (int j = 1; j <= n; ++j) x.push_back(label[j]);
          for (int j = n - 1; j >= 2; --j) y.push_back(label[j]);
          xs.push_back(x);
          ys.push_back(y);
        }
        halves.emplace_back(std::move(xs), std::move(ys));
      }
      out.degree = next_point;
      std::vector<Perm> involutions;
      for (const auto& [xs, ys] : halves) {
        Perm X = Perm::from_cycles(out.degree, xs), Y = Perm::from_cycles(out.degree, ys);
        out.factors.push_back(X);
        out.factors.push_back(Y);
        involutions.push_back(compose(X, Y));
      }
      bool pairs_ok = true;
      for (std::size_t i = 0; i < involutions.size(); ++i) {
        Cycles cs;
        for (auto [a, b] : i == 0 && !inv1.empty() ? inv1 : inv2) cs.push_back({a, b});
        pairs_ok &= involutions[i] == Perm::from_cycles(out.degree, cs);
      }
      out.checks.add("each pair of n-cycles multiplies to its pair of transpositions", pairs_ok);
    }
    Perm target = Perm::from_cycles(out.degree, t_cycles);
    out.product = Perm(out.degree);
    for (const Perm& f : out.factors) out.product = compose(out.product, f);
    out.checks.add("product equals two disjoint m-cycles", out.product == target);
  }
  if (out.product.degree() == 0) {
    out.product = Perm(out.degree);
    for (const Perm& f : out.factors) out.product = compose(out.product, f);
  }
  bool orders = true;
  for (const Perm& f : out.factors) orders &= f.order() == static_cast<std::uint64_t>(n);
  out.checks.add("every factor has order n", orders);
  out.checks.add("at most four factors", out.factors.size() <= 4, std::to_string(out.factors.size()));
  out.checks.add("product has order m", out.product.order() == static_cast<std::uint64_t>(m),
                 std::to_string(out.product.order()));
  return out;
}

VerificationReport inversion_identity_check(const PermGroup& G, std::size_t samples, std::uint64_t seed,
                                            const Caps& caps) {
  VerificationReport rep;
  auto elements = G.elements(caps.enumeration);
  auto record = [&](const Perm& g, const Perm& h, const std::string& key) {
    Perm gi = g.inverse(), g_minus2 = gi.pow(2);
    Perm h_gi = conjugate(h, gi);
    nlohmann::json in{{"g", g}, {"h", h}};
    rep.add(key + " g^-2 = h^-1 h^(g^-1)", in, true, g_minus2 == compose(h.inverse(), h_gi));
    // The other order reduces to g^-2 = g^2.
    rep.add(key + " literal g^-2 = h^(g^-1) h^-1 (holds iff g^4 = 1)", in, g.pow(4).is_identity(),
            g_minus2 == compose(h_gi, h.inverse()));
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < samples && attempt < 20 * samples + 20; ++attempt) {
    const Perm& g = elements[pick(rng)];
    Perm gi = g.inverse();
    std::vector<const Perm*> inverters;
    for (const Perm& h : elements)
      if (conjugate(g, h) == gi) inverters.push_back(&h);
    if (inverters.empty()) continue;
    const Perm& h = *inverters[rng() % inverters.size()];
    record(g, h, "sample " + std::to_string(done));
    ++done;
  }
  if (done < samples)
    rep.notes.push_back("only " + std::to_string(done) + " elements conjugate to their inverse were found");
  return rep;
}

VerificationReport permuted_generator_identity(int N, std::size_t samples, std::uint64_t seed) {
  if (N < 5 || N > 8) throw InputError("permuted generator identity is run for 5 <= N <= 8");
  const std::size_t n = static_cast<std::size_t>(N);
  AbelianGroup A = AbelianGroup::product(std::vector<std::int64_t>(n, 2));
  FiniteGroup G = A.to_finite_group();
  std::vector<Elem> gen(n);
  for (std::size_t k = 0; k < n; ++k) gen[k] = static_cast<Elem>(A.index(A.basis(k)));
  auto rho = regular_representation(G);
  auto witness = [&](const Perm& sigma) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(gen[k], gen[sigma(static_cast<Point>(k))]);
    WitnessCertificate c = hall_witness(rho, validate_partial_automorphism(G, pairs));
    if (!c.verify()) throw InternalError("permutation witness fails");
    return c.witness;
  };
  VerificationReport rep;
  auto run = [&](const Perm& sigma, const Perm& tau, const std::string& key) {
    Perm ws = witness(sigma), wt = witness(tau);
    Perm conjugated = conjugate(ws, wt);
    Perm sigma_tau = compose(tau, compose(sigma, tau.inverse()));
    std::vector<std::size_t> expected, actual;
    for (std::size_t k = 0; k < n; ++k) {
      expected.push_back(sigma_tau(static_cast<Point>(k)));
      Perm image = conjugate(rho(gen[k]), conjugated);
      auto it = std::find_if(gen.begin(), gen.end(), [&](Elem e) { return rho(e) == image; });
      actual.push_back(it == gen.end() ? n : static_cast<std::size_t>(it - gen.begin()));
    }
    rep.add(key, {{"N", N}, {"sigma", sigma}, {"tau", tau}}, expected, actual);
  };
  Perm id(n);
  run(id, id, "identity");
  run(Perm::from_cycles(n, {{0, 1, 2}}), Perm::from_cycles(n, {{1, 2}}), "sigma=(1 2 3) tau=(2 3)");
  run(Perm::from_cycles(n, {{0, 1, 2, 3, 4}}), Perm::from_cycles(n, {{0, 1}}), "sigma=(1 2 3 4 5) tau=(1 2)");
  std::mt19937_64 rng(seed);
  auto random_perm = [&] {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(img);
  };
  for (std::size_t s = 0; s < samples; ++s) {
    Perm sigma = random_perm(), tau = random_perm();
    run(sigma, tau, "sample " + std::to_string(s));
  }
  return rep;
}

}  // namespace ultrahom
