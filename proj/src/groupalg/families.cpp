#include "ultrahom/families.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "ultrahom/abelian.hpp"
#include "ultrahom/error.hpp"
#include "ultrahom/finite_group.hpp"
#include "ultrahom/perm_group.hpp"

namespace ultrahom {

std::uint32_t apply_sigma_f(int n, std::uint32_t f, std::uint32_t v) {
  const int m = n / 2;
  const std::uint32_t mask = (1u << m) - 1;
  const std::uint32_t v2 = (v >> (n - m)) & mask;
  std::uint32_t fv = 0;
  for (int r = 0; r < m; ++r) {
    std::uint32_t row = (f >> (r * m)) & mask;
    fv |= static_cast<std::uint32_t>(std::popcount(row & v2) & 1) << r;
  }
  return v ^ fv;
}

SigmaFamilyReport sigma_family_2explosion(int n) {
  if (n < 2) throw InputError("sigma family needs n >= 2");
  if (n > 10) throw CapExceeded("sigma family is enumerated only for n <= 10");
  SigmaFamilyReport rep;
  rep.n = n;
  rep.m = n / 2;
  const int m = rep.m;
  rep.family_order_log2 = static_cast<std::uint64_t>(m) * m;
  const std::uint32_t N = 1u << n;
  const std::uint64_t F = 1ull << (m * m);
  const bool exhaustive = m <= 3;
  std::mt19937_64 rng(0x2e9 + n);
  std::vector<std::uint32_t> fs;
  if (exhaustive) {
    for (std::uint64_t f = 0; f < F; ++f) fs.push_back(static_cast<std::uint32_t>(f));
  } else {
    for (int i = 0; i < 4000; ++i) fs.push_back(static_cast<std::uint32_t>(rng() % F));
  }

  bool zero_is_identity = true;
  for (std::uint32_t v = 0; v < N; ++v) zero_is_identity &= apply_sigma_f(n, 0, v) == v;
  rep.checks.add("sigma_0 is the identity", zero_is_identity);

  bool composition = true;
  std::string bad;
  auto check_pair = [&](std::uint32_t f, std::uint32_t g) {
    for (std::uint32_t v = 0; v < N; ++v)
      if (apply_sigma_f(n, f, apply_sigma_f(n, g, v)) != apply_sigma_f(n, f ^ g, v)) {
        if (composition) bad = "f=" + std::to_string(f) + " g=" + std::to_string(g);
        composition = false;
        return;
      }
  };
  if (exhaustive) {
    for (std::uint32_t f : fs)
      for (std::uint32_t g : fs) check_pair(f, g);
  } else {
    for (int i = 0; i < 20000; ++i)
      check_pair(static_cast<std::uint32_t>(rng() % F), static_cast<std::uint32_t>(rng() % F));
  }
  rep.checks.add("sigma_f sigma_g = sigma_(f+g)", composition,
                 (exhaustive ? "all pairs" : "20000 sampled pairs") + (bad.empty() ? "" : "; fails at " + bad));

  bool automorphic = true, involutive = true;
  std::vector<char> hit(N);
  for (std::uint32_t f : fs) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::uint32_t v = 0; v < N; ++v) {
      std::uint32_t s = apply_sigma_f(n, f, v);
      automorphic &= !hit[s];
      hit[s] = 1;
      involutive &= apply_sigma_f(n, f, s) == v;
      for (int i = 0; i < n; ++i)
        automorphic &= apply_sigma_f(n, f, v ^ (1u << i)) == (s ^ apply_sigma_f(n, f, 1u << i));
    }
  }
  rep.checks.add("each sigma_f is an automorphism", automorphic);
  rep.checks.add("each sigma_f is an involution", involutive);

  // f -> sigma_f is a homomorphism, so injectivity means sigma_f != id for f != 0.
  bool injective = true;
  std::vector<std::uint32_t> nonzero;
  if (m <= 4) {
    for (std::uint64_t f = 1; f < F; ++f) nonzero.push_back(static_cast<std::uint32_t>(f));
  } else {
    for (std::uint32_t f : fs)
      if (f) nonzero.push_back(f);
  }
  for (std::uint32_t f : nonzero) {
    bool moves = false;
    for (std::uint32_t v = 0; v < N && !moves; ++v) moves = apply_sigma_f(n, f, v) != v;
    injective &= moves;
  }
  rep.checks.add("f -> sigma_f is injective", injective,
                 "family order 2^" + std::to_string(rep.family_order_log2));

  std::uint32_t id = 0;
  for (int i = 0; i < m; ++i) id |= 1u << (i * m + i);
  const std::uint32_t v2_mask = ((1u << m) - 1) << (n - m);
  bool fixed_exact = true, fixed_by_all = true;
  for (std::uint32_t v = 0; v < N; ++v) {
    bool fixed = apply_sigma_f(n, id, v) == v;
    if (fixed) ++rep.sigma_id_fixed_points;
    fixed_exact &= fixed == ((v & v2_mask) == 0);
    if (fixed)
      for (std::uint32_t f : fs) fixed_by_all &= apply_sigma_f(n, f, v) == v;
  }
  rep.checks.add("fixed points of sigma_id are exactly (v1, w, 0)",
                 fixed_exact && rep.sigma_id_fixed_points == (1u << (n - m)),
                 std::to_string(rep.sigma_id_fixed_points) + " fixed points");
  rep.checks.add("fixed points of sigma_id are fixed by the whole family", fixed_by_all);
  rep.checks.add("floor(n/2)^2 > n exactly when n >= 6", (m * m > n) == (n >= 6),
                 std::to_string(m * m) + " vs " + std::to_string(n));
  return rep;
}

namespace {

std::vector<std::uint32_t> compose_maps(const std::vector<std::uint32_t>& p,
                                        const std::vector<std::uint32_t>& q) {
  std::vector<std::uint32_t> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

}  // namespace

SigmaTauReport sigma_tau_cyclic2(int k, int m) {
  if (k < 2 || m < 0) throw InputError("sigma/tau family needs k >= 2 and m >= 0");
  if (k > 7 || m > 4) throw CapExceeded("sigma/tau family is enumerated only for k <= 7, m <= 4");
  SigmaTauReport rep;
  rep.k = k;
  rep.m = m;
  const std::uint32_t A = 1u << k, J = 1u << m, N = A * J;
  auto idx = [&](std::uint32_t a, std::uint32_t j) { return (a % A) * J + j; };
  rep.sigma1.resize(N);
  rep.sigma2.resize(N);
  rep.taus.assign(m, std::vector<std::uint32_t>(N));
  for (std::uint32_t a = 0; a < A; ++a)
    for (std::uint32_t j = 0; j < J; ++j) {
      rep.sigma1[idx(a, j)] = k == 2 ? idx(a, j) : idx(3 * a, j);
      rep.sigma2[idx(a, j)] = idx(A - a, j);
      for (int i = 0; i < m; ++i) rep.taus[i][idx(a, j)] = idx(a, j ^ ((a & 1u) << i));
    }
  std::vector<std::vector<std::uint32_t>> maps{rep.sigma1, rep.sigma2};
  maps.insert(maps.end(), rep.taus.begin(), rep.taus.end());

  auto add = [&](std::uint32_t x, std::uint32_t y) {
    return idx(x / J + y / J, (x % J) ^ (y % J));
  };
  bool automorphic = true;
  for (const auto& f : maps) {
    std::vector<char> hit(N, 0);
    for (std::uint32_t x = 0; x < N; ++x) {
      automorphic &= !hit[f[x]];
      hit[f[x]] = 1;
      for (std::uint32_t y = 0; y < N; ++y) automorphic &= f[add(x, y)] == add(f[x], f[y]);
    }
  }
  rep.checks.add("sigma1, sigma2, tau_i are automorphisms", automorphic);

  bool commute = true;
  for (const auto& f : maps)
    for (const auto& g : maps) commute &= compose_maps(f, g) == compose_maps(g, f);
  rep.checks.add("all generators commute", commute);

  auto as_perm = [](const std::vector<std::uint32_t>& f) {
    return Perm(std::vector<Point>(f.begin(), f.end()));
  };
  Perm s1 = as_perm(rep.sigma1), s2 = as_perm(rep.sigma2);
  rep.sigma1_order = s1.order();
  const std::uint64_t expected_s1 = k >= 3 ? (1ull << (k - 2)) : 1;
  rep.checks.add(k >= 3 ? "order(sigma1) = 2^(k-2)" : "sigma1 is the identity at k = 2",
                 rep.sigma1_order == expected_s1, "order " + std::to_string(rep.sigma1_order));

  bool outside = true;
  for (std::uint64_t e = 0; e < rep.sigma1_order; ++e) outside &= s1.pow(static_cast<long long>(e)) != s2;
  rep.checks.add("sigma2 is not in <sigma1>", outside);

  bool taus_order2 = true;
  for (const auto& t : rep.taus) taus_order2 &= as_perm(t).order() == 2;
  rep.checks.add("each tau_i has order 2", taus_order2);

  std::vector<Perm> gens;
  for (const auto& f : maps) {
    Perm p = as_perm(f);
    if (!p.is_identity()) gens.push_back(p);
  }
  auto elements = enumerate_closure(N, gens, 1u << 20);
  if (!elements) throw CapExceeded("generated automorphism group too large");
  std::vector<std::uint64_t> orders;
  for (const Perm& p : *elements) orders.push_back(p.order());
  rep.generated_invariants = abelian_invariants_from_orders(orders);
  std::vector<std::int64_t> expected_moduli(static_cast<std::size_t>(m) + 1, 2);
  if (k >= 3) expected_moduli.push_back(std::int64_t{1} << (k - 2));
  std::vector<std::uint64_t> expected_norm;
  for (std::int64_t d : AbelianGroup::normalized(expected_moduli).invariant_factors())
    expected_norm.push_back(static_cast<std::uint64_t>(d));
  std::string got;
  for (auto d : rep.generated_invariants) got += (got.empty() ? "" : ",") + std::to_string(d);
  rep.checks.add("<sigma1, sigma2, tau_i> = Z/2^(k-2) x (Z/2)^(m+1)",
                 rep.generated_invariants == expected_norm, "invariants [" + got + "]");

  bool fixed_exact = true, fixed_by_all = true;
  for (std::uint32_t x = 0; x < N; ++x) {
    std::uint32_t a = x / J;
    bool fixed = rep.sigma2[x] == x;
    fixed_exact &= fixed == (a == 0 || a == A / 2);
    if (fixed)
      for (const auto& f : maps) fixed_by_all &= f[x] == x;
  }
  rep.checks.add("fixed points of sigma2 = 2^(k-1)Z/2^k x (Z/2)^m", fixed_exact);
  rep.checks.add("fixed points of sigma2 are fixed by every generator", fixed_by_all);
  return rep;
}

}  // namespace ultrahom
