#include <doctest.h>

#include <random>
#include <set>

#include "ultrahom/centralizer.hpp"
#include "ultrahom/error.hpp"
#include "ultrahom/perm_json.hpp"

using namespace ultrahom;

namespace {

Perm cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Perm::from_cycles(n, cycles);
}

Perm random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

std::set<Perm> brute_elements(const PermGroup& G) {
  auto all = enumerate_closure(G.degree(), G.generators(), 1'000'000);
  REQUIRE(all);
  return {all->begin(), all->end()};
}

std::set<Perm> brute_centralizer(const PermGroup& G, const std::vector<Perm>& S) {
  std::set<Perm> out;
  for (const Perm& g : brute_elements(G)) {
    bool ok = true;
    for (const Perm& s : S) ok = ok && g * s == s * g;
    if (ok) out.insert(g);
  }
  return out;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  Perm p = cyc(4, {{0, 1, 2}});
  Perm q = cyc(4, {{2, 3, 1}});
  CHECK(compose(p, q) == cyc(4, {{0, 1}, {2, 3}}));
  CHECK(compose(cyc(3, {{1, 2}}), Perm(3)) == cyc(3, {{1, 2}}));
  CHECK(conjugate(cyc(3, {{0, 1}}), cyc(3, {{1, 2}})) == cyc(3, {{0, 2}}));
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), InputError);
}

TEST_CASE("conjugation is a right action") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + rng() % 9;
    Perm g = random_perm(n, rng), h = random_perm(n, rng), k = random_perm(n, rng);
    CHECK(conjugate(conjugate(g, h), k) == conjugate(g, h * k));
    CHECK(g * g.inverse() == Perm(n));
    long long e = static_cast<long long>(rng() % 13) - 6;
    Perm slow(n);
    Perm step = e >= 0 ? g : g.inverse();
    for (long long i = 0; i < std::llabs(e); ++i) slow = slow * step;
    CHECK(g.pow(e) == slow);
  }
}

TEST_CASE("element orders and parsing") {
  CHECK(Perm(5).order() == 1);
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).order() == 6);
  CHECK(Perm::parse_cycles(5, "(1,2,3)(4,5)") == cyc(5, {{0, 1, 2}, {3, 4}}));
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), InputError);
  CHECK(cyc(4, {{0, 2}}).to_string() == "(0 2)");
}

TEST_CASE("stabilizer chain orders") {
  PermGroup s3(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
  CHECK(s3.order() == 6);
  PermGroup s6(6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{0, 1}})});
  CHECK(s6.order() == 720);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(cyc(n, {{Point(i), Point(i + 1)}}));
    CHECK(PermGroup(n, gens).order() == factorial(n));
  }
  // Regular image of S_3 in Sym(6): chain order agrees with closure size.
  auto elems = enumerate_closure(3, s3.generators(), 100);
  REQUIRE(elems);
  std::vector<Perm> regular;
  for (const Perm& g : s3.generators()) {
    std::vector<Point> img;
    for (const Perm& a : *elems) {
      Perm ga = g * a;
      img.push_back(static_cast<Point>(std::find(elems->begin(), elems->end(), ga) - elems->begin()));
    }
    regular.emplace_back(img);
  }
  CHECK(PermGroup(6, regular).order() == 6);
}

TEST_CASE("stabilizer chain agrees with closure on random groups") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 3 + rng() % 6;
    std::vector<Perm> gens;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      // Sparse generators so that proper subgroups are common.
      Perm p(n);
      Point a = rng() % n, b = rng() % n, c = rng() % n;
      if (a != b && b != c && a != c) p = cyc(n, {{a, b, c}});
      else if (a != b) p = cyc(n, {{a, b}});
      gens.push_back(p * (rng() % 2 ? Perm(n) : cyc(n, {{0, Point(n - 1)}})));
    }
    PermGroup G(n, gens);
    auto closure = brute_elements(G);
    CHECK(G.order() == closure.size());
    auto listed = G.elements(1'000'000);
    CHECK(std::set<Perm>(listed.begin(), listed.end()) == closure);
    CHECK(listed.front().is_identity());
    for (int r = 0; r < 20; ++r) {
      Perm x = random_perm(n, rng);
      CHECK(G.contains(x) == (closure.count(x) == 1));
    }
    for (const Perm& a : gens)
      for (const Perm& b : gens)
        for (const Perm& c : gens) CHECK(G.contains(a * b * c));
  }
}

TEST_CASE("large symmetric groups stay symbolic") {
  PermGroup big = PermGroup::symmetric(720);
  CHECK(big.order() == factorial(720));
  CHECK(big.contains(Perm(720)));
  CHECK_THROWS_AS(big.chain(), CapExceeded);
  CHECK(PermGroup::symmetric(7).chain().order() == 5040);
}

TEST_CASE("centralizer examples") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(centralizer(s3, {Perm(3)}).order() == 6);
  PermGroup c = centralizer(s3, {cyc(3, {{0, 1, 2}})});
  CHECK(c.order() == 3);
  CHECK(c.contains(cyc(3, {{0, 1, 2}})));
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup d = centralizer(s4, {cyc(4, {{0, 1}, {2, 3}})});
  CHECK(d.order() == 8);
  CHECK(brute_centralizer(s4, {cyc(4, {{0, 1}, {2, 3}})}).size() == 8);
  CHECK_THROWS_AS(centralizer(PermGroup(3, {cyc(3, {{0, 1, 2}})}), {cyc(3, {{0, 1}})}),
                  PreconditionError);
}

TEST_CASE("double centralizer examples") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(same_group(double_centralizer(s3, s3.generators()), s3));
  PermGroup s5 = PermGroup::symmetric(5);
  Perm five = cyc(5, {{0, 1, 2, 3, 4}});
  CHECK(same_group(double_centralizer(s5, {five}), PermGroup(5, {five})));
  PermGroup s4 = PermGroup::symmetric(4);
  CHECK(same_group(double_centralizer(s4, {cyc(4, {{0, 1}})}),
                   PermGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})})));
}

TEST_CASE("backtrack centralizer matches enumeration") {
  std::mt19937 rng(3);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 3 + rng() % 5;
    PermGroup G = (t % 3 == 0) ? PermGroup::symmetric(n)
                               : PermGroup(n, {random_perm(n, rng), random_perm(n, rng)});
    auto elems = G.elements(1'000'000);
    std::vector<Perm> S;
    std::size_t k = rng() % 3;
    for (std::size_t i = 0; i < k; ++i) S.push_back(elems[rng() % elems.size()]);
    PermGroup fast = centralizer(G, S);
    PermGroup slow = centralizer_by_enumeration(G, S, 1'000'000);
    CHECK(same_group(fast, slow));
    auto brute = brute_centralizer(G, S);
    CHECK(fast.order() == brute.size());
  }
  // A degree where enumeration is out of reach.
  Perm g = cyc(15, {{0, 1, 2}, {3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14}});
  PermGroup c = centralizer(PermGroup::symmetric(15), {g});
  CHECK(c.order() == 105);
}

TEST_CASE("normalizer examples") {
  PermGroup s4 = PermGroup::symmetric(4);
  CHECK(same_group(normalizer(s4, s4, 1000), s4));
  CHECK(normalizer(s4, PermGroup(4, {cyc(4, {{0, 1, 2, 3}})}), 1000).order() == 8);
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(same_group(normalizer(s3, PermGroup(3, {cyc(3, {{0, 1}})}), 1000),
                   PermGroup(3, {cyc(3, {{0, 1}})})));
  CHECK_THROWS_AS(normalizer(PermGroup::symmetric(9), PermGroup::symmetric(9), 100),
                  CapExceeded);
}

TEST_CASE("conjugacy witnesses") {
  PermGroup s4 = PermGroup::symmetric(4);
  Perm a = cyc(4, {{0, 1}}), b = cyc(4, {{2, 3}});
  auto w = conjugacy_witness(s4, a, b, 1000);
  REQUIRE(w);
  CHECK(*w == cyc(4, {{0, 2}, {1, 3}}));
  CHECK(conjugate(a, *w) == b);
  CHECK(conjugacy_witness(s4, a, a, 1000) == Perm(4));
  CHECK_FALSE(conjugacy_witness(PermGroup::symmetric(3), cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}}), 100));
  // Inside A_4 the two classes of 3-cycles do not fuse.
  PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  CHECK_FALSE(conjugacy_witness(a4, cyc(4, {{0, 1, 2}}), cyc(4, {{0, 2, 1}}), 100));
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 12;
    Perm x = random_perm(n, rng), h = random_perm(n, rng);
    Perm y = conjugate(x, h);
    auto found = symmetric_conjugator(x, y);
    REQUIRE(found);
    CHECK(conjugate(x, *found) == y);
  }
}

TEST_CASE("json round trip") {
  PermGroup G(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  auto j = group_to_json(G);
  CHECK(j["degree"] == 4);
  CHECK(j["generators"][0] == nlohmann::json::array({1, 2, 3, 0}));
  PermGroup back = group_from_json(j);
  CHECK(same_group(back, G));
  CHECK_THROWS_AS(nlohmann::json::array({0, 0}).get<Perm>(), InputError);
}
