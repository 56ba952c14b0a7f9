#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ultrahom/abelian.hpp"
#include "ultrahom/corpus.hpp"
#include "ultrahom/families.hpp"
#include "ultrahom/group_json.hpp"
#include "ultrahom/homomorphism.hpp"

using namespace ultrahom;

namespace {

std::vector<std::uint64_t> orders_of(const FiniteGroup& G, const std::vector<Elem>& H) {
  std::vector<std::uint64_t> o;
  for (Elem h : H) o.push_back(G.element_order(h));
  std::sort(o.begin(), o.end());
  return o;
}

std::vector<Elem> everything(const FiniteGroup& G) {
  std::vector<Elem> all(G.order());
  for (Elem i = 0; i < G.order(); ++i) all[i] = i;
  return all;
}

}  // namespace

TEST_CASE("tables are groups") {
  for (const FiniteGroup& G : small_group_corpus()) {
    CAPTURE(G.name());
    for (Elem a = 0; a < G.order(); ++a) {
      CHECK(G.mul(0, a) == a);
      CHECK(G.mul(a, G.inv(a)) == 0);
      CHECK(G.pow(a, static_cast<long long>(G.element_order(a))) == 0);
    }
    CHECK_NOTHROW(FiniteGroup::from_table(G.table()));
  }
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InputError);
  // Latin square with identity 0 that is not associative.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                  InputError);
}

TEST_CASE("small group corpus has one group per isomorphism class") {
  auto corpus = small_group_corpus();
  const std::map<std::size_t, std::size_t> known{{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
                                                  {7, 1},  {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
                                                  {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
                                                  {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}};
  std::map<std::size_t, std::size_t> counts;
  for (const auto& G : corpus) ++counts[G.order()];
  CHECK(counts == known);
  CHECK(corpus.size() == 74);
  std::size_t iso_searches = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size() && corpus[j].order() == corpus[i].order(); ++j) {
      CAPTURE(corpus[i].name());
      CAPTURE(corpus[j].name());
      // Different element-order statistics already prove non-isomorphism.
      if (orders_of(corpus[i], everything(corpus[i])) != orders_of(corpus[j], everything(corpus[j]))) continue;
      ++iso_searches;
      CHECK(find_isomorphism(corpus[i], corpus[j]).empty());
    }
  CHECK(iso_searches > 0);
  auto small = small_group_corpus(8);
  CHECK(small.size() == 14);
  CHECK_THROWS_AS(small_group_corpus(25), CapExceeded);
}

TEST_CASE("named groups") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(5).order() == 60);
  CHECK(center(dihedral(4)).size() == 2);
  CHECK(center(dicyclic(2)).size() == 2);
  CHECK(center(symmetric_group(4)).size() == 1);
  CHECK(!dihedral(5).is_abelian());
  CHECK(FiniteGroup::cyclic(12).is_abelian());
  std::size_t involutions = 0;
  FiniteGroup q8 = dicyclic(2);
  for (Elem a = 0; a < 8; ++a) involutions += q8.element_order(a) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("permutation corpus") {
  auto corpus = permutation_corpus();
  std::map<std::string, std::size_t> expected{{"S6", 720},  {"A7", 2520},    {"PSL(3,2)", 168},
                                              {"S3xS4", 144}, {"S2 wr S4", 384}, {"AGL(1,11)", 110},
                                              {"S5xS2", 240}};
  std::size_t seen = 0;
  for (const auto& [name, G] : corpus) {
    CHECK(G.order() <= 5000);
    if (auto it = expected.find(name); it != expected.end()) {
      CAPTURE(name);
      CHECK(G.order() == it->second);
      ++seen;
    }
  }
  CHECK(seen == expected.size());
}

TEST_CASE("validate_partial_automorphism examples") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  auto id = validate_partial_automorphism(z4, {{1, 1}});
  CHECK(id.is_identity());
  CHECK(id.domain == std::vector<Elem>{0, 1, 2, 3});
  auto inv = validate_partial_automorphism(z4, {{1, 3}});
  CHECK(inv(1) == 3);
  CHECK(inv(2) == 2);
  CHECK(inv(3) == 1);
  try {
    validate_partial_automorphism(z4, {{1, 2}});
    FAIL("accepted a ↦ a²");
  } catch (const RejectedPairing& r) {
    CHECK(!r.trivial_in_domain);
    CHECK(!r.word.empty());
  }
  CHECK_THROWS_AS(validate_partial_automorphism(z4, {{1, 4}}), InputError);
  auto empty = validate_partial_automorphism(z4, {});
  CHECK(empty.domain == std::vector<Elem>{0});
}

TEST_CASE("validate_partial_automorphism agrees with brute-force isomorphism search") {
  std::mt19937 rng(7);
  std::size_t accepted = 0, rejected = 0;
  for (const FiniteGroup& G : small_group_corpus(16)) {
    CAPTURE(G.name());
    const Elem n = static_cast<Elem>(G.order());
    std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::vector<std::vector<Elem>>> cache;
    auto check = [&](const std::vector<std::pair<Elem, Elem>>& pairs) {
      std::vector<Elem> as, bs;
      for (auto [a, b] : pairs) as.push_back(a), bs.push_back(b);
      auto H = oracle::closure(G, as), K = oracle::closure(G, bs);
      auto key = std::pair{H, K};
      if (!cache.count(key)) cache[key] = oracle::isomorphisms(G, H, K);
      bool exists = std::any_of(cache[key].begin(), cache[key].end(), [&](const auto& m) {
        return std::all_of(pairs.begin(), pairs.end(), [&](auto p) { return m[p.first] == p.second; });
      });
      bool verdict = true;
      try {
        auto pa = validate_partial_automorphism(G, pairs);
        for (auto [a, b] : pairs) CHECK(pa(a) == b);
        CHECK(pa.domain == H);
        CHECK(pa.range == K);
      } catch (const RejectedPairing&) {
        verdict = false;
      }
      CHECK(verdict == exists);
      (verdict ? accepted : rejected)++;
    };
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) check({{a, b}});
    if (n <= 8) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            for (Elem d = 0; d < n; ++d) check({{a, b}, {c, d}});
    } else {
      std::uniform_int_distribution<Elem> pick(0, n - 1);
      for (int t = 0; t < 400; ++t) check({{pick(rng), pick(rng)}, {pick(rng), pick(rng)}});
      for (int t = 0; t < 100; ++t)
        check({{pick(rng), pick(rng)}, {pick(rng), pick(rng)}, {pick(rng), pick(rng)}});
    }
  }
  CHECK(accepted > 1000);
  CHECK(rejected > 1000);
}

TEST_CASE("subgroup isomorphisms match brute force") {
  for (const FiniteGroup& G : small_group_corpus(12)) {
    CAPTURE(G.name());
    auto subs = all_subgroups(G);
    for (const auto& H : subs)
      for (const auto& K : subs) {
        if (H.size() != K.size()) continue;
        auto ours = subgroup_isomorphisms(G, H, K);
        auto theirs = oracle::isomorphisms(G, H, K);
        // ours are indexed like H, theirs by element of G.
        std::set<std::vector<Elem>> a, b;
        for (const auto& m : ours) a.insert(m);
        for (const auto& m : theirs) {
          std::vector<Elem> r;
          for (Elem h : H) r.push_back(m[h]);
          b.insert(r);
        }
        CHECK(a == b);
      }
  }
}

TEST_CASE("automorphism group orders") {
  std::map<std::string, std::size_t> expected{
      {"Z2", 1},     {"Z5", 4},    {"Z2xZ2", 6}, {"S3", 6},   {"D4", 8},    {"Q8", 24},
      {"Z2^3", 168}, {"A4", 24},   {"S4", 24},   {"Z12", 4},  {"D5", 20},   {"Dic3", 12},
      {"Z3xZ3", 48}, {"SL(2,3)", 24}, {"Z2xZ4", 8}, {"F20", 20}, {"Z7:Z3", 42}};
  std::size_t seen = 0;
  for (const FiniteGroup& G : small_group_corpus()) {
    auto auts = automorphisms(G);
    for (const auto& f : auts) {
      GroupHomomorphism h{G, G, f};
      CHECK(h.is_homomorphism());
      CHECK(h.is_injective());
    }
    if (auto it = expected.find(G.name()); it != expected.end()) {
      CAPTURE(G.name());
      CHECK(auts.size() == it->second);
      ++seen;
    }
  }
  CHECK(seen == expected.size());
}

TEST_CASE("homomorphisms from generator images") {
  FiniteGroup z6 = FiniteGroup::cyclic(6), z3 = FiniteGroup::cyclic(3);
  auto h = GroupHomomorphism::from_generator_images(z6, z3, {1}, {1});
  CHECK(h.is_homomorphism());
  CHECK(!h.is_injective());
  CHECK(h(5) == 2);
  CHECK_THROWS_AS(GroupHomomorphism::from_generator_images(z3, z6, {1}, {1}), InputError);
}

TEST_CASE("direct products") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  auto klein = direct_product(z2, z2);
  std::size_t involutions = 0;
  for (Elem a = 0; a < 4; ++a) involutions += klein.group.element_order(a) == 2;
  CHECK(involutions == 3);
  auto s3z2 = direct_product(dihedral(3), z2);
  CHECK(s3z2.group.order() == 12);
  CHECK(center(s3z2.group).size() == 2);
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 2; ++h) {
      CHECK(s3z2.group.mul(s3z2.embed_first[g], s3z2.embed_second[h]) == s3z2.pair(g, h));
      CHECK(s3z2.group.commute(s3z2.embed_first[g], s3z2.embed_second[h]));
    }
  auto with_trivial = direct_product(dihedral(4), FiniteGroup::trivial());
  CHECK(!find_isomorphism(with_trivial.group, dihedral(4)).empty());
  CHECK_THROWS_AS(direct_product(symmetric_group(5), symmetric_group(5), 10'000), CapExceeded);
}

TEST_CASE("semidirect and metacyclic presentations") {
  CHECK_THROWS_AS(metacyclic(5, 2, 2, 0), InputError);  // 2^2 = 4 ≠ 1 mod 5
  FiniteGroup z3 = FiniteGroup::cyclic(3), z2 = FiniteGroup::cyclic(2);
  auto s3 = semidirect_product(z3, z2, {1}, {{0, 2, 1}});
  CHECK(!find_isomorphism(s3, dihedral(3)).empty());
  CHECK_THROWS_AS(semidirect_product(z3, FiniteGroup::cyclic(3), {1}, {{0, 2, 1}}), InputError);
}

TEST_CASE("abelian groups") {
  auto G = AbelianGroup::normalized({6, 4});
  CHECK(G.invariant_factors() == std::vector<std::int64_t>{2, 12});
  CHECK(G.to_string() == "Z2xZ12");
  CHECK(G.exponent() == 12);
  CHECK_THROWS_AS(AbelianGroup::from_invariant_factors({4, 2}), InputError);
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<std::int64_t>{2, 4});
  std::map<std::uint64_t, std::size_t> counts{{8, 3}, {16, 5}, {36, 4}, {64, 11}, {72, 6}};
  for (auto [n, c] : counts) CHECK(abelian_groups_of_order(n).size() == c);
  for (const FiniteGroup& F : small_group_corpus())
    if (F.is_abelian()) {
      std::vector<std::uint64_t> o;
      for (Elem a = 0; a < F.order(); ++a) o.push_back(F.element_order(a));
      CHECK(abelian_invariants(F) == oracle::invariants_from_orders(o));
    }
}

TEST_CASE("abelian_quotient_subgroup examples") {
  auto z4 = AbelianGroup::product({4});
  auto q = abelian_quotient_subgroup(z4, {{2}});
  CHECK(q.invariant_factors == std::vector<std::int64_t>{2});
  CHECK(q.elements == std::vector<std::uint64_t>{0, 2});
  auto triv = abelian_quotient_subgroup(z4, {});
  CHECK(triv.elements.size() == 4);
  auto z2z4 = AbelianGroup::product({2, 4});
  auto q2 = abelian_quotient_subgroup(z2z4, {{1, 2}});
  CHECK(q2.invariant_factors == std::vector<std::int64_t>{4});
}

TEST_CASE("abelian_quotient_subgroup against a coset-table oracle") {
  std::size_t cases = 0;
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (const AbelianGroup& B : abelian_groups_of_order(n)) {
      FiniteGroup F = B.to_finite_group();
      for (const auto& A : all_subgroups(F)) {
        std::vector<AbVec> gens;
        for (Elem a : F.generating_set(A)) gens.push_back(B.element(a));
        auto q = abelian_quotient_subgroup(B, gens);
        CAPTURE(B.to_string());
        CAPTURE(A.size());
        // Quotient orders: smallest k with k·x in A, one entry per coset.
        std::vector<char> inA(n, 0), seen(n, 0);
        for (Elem a : A) inA[a] = 1;
        std::vector<std::uint64_t> quotient_orders, b0_orders;
        for (Elem x = 0; x < n; ++x) {
          if (seen[x]) continue;
          for (Elem a : A) seen[F.mul(x, a)] = 1;
          std::uint64_t k = 1;
          for (Elem y = x; !inA[y]; y = F.mul(y, x)) ++k;
          quotient_orders.push_back(k);
        }
        for (auto e : q.elements) b0_orders.push_back(F.element_order(static_cast<Elem>(e)));
        CHECK(q.elements.size() * A.size() == n);
        CHECK(oracle::invariants_from_orders(b0_orders) == oracle::invariants_from_orders(quotient_orders));
        std::vector<std::uint64_t> factors(q.invariant_factors.begin(), q.invariant_factors.end());
        CHECK(factors == oracle::invariants_from_orders(quotient_orders));
        ++cases;
      }
    }
  CHECK(cases > 1000);
}

TEST_CASE("sigma family on (Z/2)^n") {
  for (int n = 2; n <= 8; ++n) {
    auto rep = sigma_family_2explosion(n);
    CAPTURE(n);
    CHECK(rep.checks.all_passed());
  }
  auto six = sigma_family_2explosion(6);
  CHECK(six.family_order_log2 == 9);
  CHECK(sigma_family_2explosion(7).sigma_id_fixed_points == 16);
  for (std::uint32_t v = 0; v < 64; ++v) CHECK(apply_sigma_f(6, 0, v) == v);
  CHECK_THROWS_AS(sigma_family_2explosion(1), InputError);
  CHECK_THROWS_AS(sigma_family_2explosion(11), CapExceeded);
}

TEST_CASE("sigma/tau automorphisms of Z/2^k x (Z/2)^m") {
  for (int k = 2; k <= 6; ++k)
    for (int m = 0; m <= 3; ++m) {
      auto rep = sigma_tau_cyclic2(k, m);
      CAPTURE(k);
      CAPTURE(m);
      CAPTURE(rep.checks.failures());
      CHECK(rep.checks.all_passed());
    }
  CHECK(sigma_tau_cyclic2(4, 0).sigma1_order == 4);
  auto k2 = sigma_tau_cyclic2(2, 0);
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(k2.sigma1[x] == x);
  CHECK(sigma_tau_cyclic2(3, 1).generated_invariants == std::vector<std::uint64_t>{2, 2, 2});
  CHECK_THROWS_AS(sigma_tau_cyclic2(8, 0), CapExceeded);
}

TEST_CASE("odd abelian fixing automorphisms") {
  auto z9 = AbelianGroup::product({9});
  auto a = odd_abelian_fixing_automorphism(z9, {3});
  CHECK(a(3) == 3);
  CHECK(a(1) == 4);
  auto z3z3 = AbelianGroup::product({3, 3});
  auto b = odd_abelian_fixing_automorphism(z3z3, {1, 0});
  CHECK(b.construction == "complement inversion");
  CHECK(b(z3z3.index({1, 0})) == z3z3.index({1, 0}));
  CHECK(b(z3z3.index({0, 1})) == z3z3.index({0, 2}));
  auto z5 = AbelianGroup::product({5});
  auto c = odd_abelian_fixing_automorphism(z5, {0});
  CHECK(is_automorphism(z5, c.table));
  CHECK_THROWS_AS(odd_abelian_fixing_automorphism(z5, {1}), PreconditionError);
  CHECK_THROWS_AS(odd_abelian_fixing_automorphism(AbelianGroup::product({4}), {2}), PreconditionError);
}

TEST_CASE("group json round trip") {
  FiniteGroup d4 = dihedral(4);
  auto j = finite_group_to_json(d4);
  CHECK(j["order"] == 8);
  FiniteGroup back = finite_group_from_json(j);
  CHECK(back.table() == d4.table());
  CHECK_THROWS_AS(finite_group_from_json(nlohmann::json{{"table", "nope"}}), InputError);
  auto A = AbelianGroup::normalized({2, 4});
  CHECK(abelian_group_from_json(abelian_group_to_json(A)) == A);
  CHECK(abelian_group_to_json(AbelianGroup::product({4, 2})).contains("moduli"));
}
