#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include <unistd.h>

#include "ultrahom/tower.hpp"

using namespace ultrahom;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("ultrahom-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

TowerOptions no_cache() {
  TowerOptions o;
  o.cache_dir = std::nullopt;
  return o;
}

const Tower& shared_tower() {
  static const Tower t(2, [] {
    TowerOptions o;
    o.cache_dir = fresh_dir("shared");
    return o;
  }());
  return t;
}

std::uint64_t part_of(std::uint64_t k, std::uint64_t m) {
  std::uint64_t d = 1;
  for (std::uint64_t q = 2; q <= k; ++q) {
    bool prime = true;
    for (std::uint64_t r = 2; r * r <= q; ++r) prime &= q % r != 0;
    if (!prime || m % q) continue;
    while (k % (d * q) == 0 && (k / d) % q == 0) d *= q;
  }
  return d;
}

}  // namespace

TEST_CASE("sha256 matches known digests") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("tower levels") {
  const Tower& t = shared_tower();
  CHECK(t.finite(0).order() == 6);
  CHECK(t.finite(1).order() == 720);
  CHECK(t.level(1).group.degree() == 6);
  CHECK(t.level(2).group.degree() == 720);
  CHECK(t.level(2).group.is_full_symmetric());
  CHECK(!t.level(2).elements);
  CHECK(t.level(2).group.order() == factorial(720));
  CHECK(t.finite(0).realization()[0].is_identity());
  CHECK(t.finite(1).realization()[0].is_identity());
  CHECK(t.level(0).up_embedding_checked);
  CHECK(t.level(1).up_embedding_checked);
  CHECK_THROWS_AS(Tower(3, no_cache()), InputError);
  CHECK_THROWS_AS(t.finite(2), InputError);
}

TEST_CASE("up embedding is an injective, fixed-point-free homomorphism") {
  const Tower& t = shared_tower();
  const FiniteGroup& G = t.finite(0);
  std::set<Perm> images;
  for (Elem g = 0; g < 6; ++g) {
    Perm u = t.up(0, G.realization()[g]);
    images.insert(u);
    CHECK(u.order() == G.realization()[g].order());
    if (g) CHECK(u.fixed_point_count() == 0);
    for (Elem h = 0; h < 6; ++h)
      CHECK(compose(u, t.up(0, G.realization()[h])) == t.up(0, G.realization()[G.mul(g, h)]));
  }
  CHECK(images.size() == 6);
  Perm six = Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  Perm two = t.lift(0, 2, G.realization()[1]);
  CHECK(two.degree() == 720);
  CHECK(t.lift(1, 2, six).cycle_type() == std::vector<std::size_t>(120, 6));
  CHECK(two.fixed_point_count() == 0);
  CHECK_THROWS_AS(t.index_of(0, Perm(4)), InputError);
}

TEST_CASE("cache round trip, corruption and unusable directories") {
  fs::path dir = fresh_dir("cache");
  TowerOptions o;
  o.cache_dir = dir;
  Tower first(1, o);
  CHECK(!first.level(0).from_cache);
  CHECK(fs::exists(dir / "level0.json"));
  CHECK(fs::exists(dir / "level1.json"));
  Tower second(1, o);
  CHECK(second.level(1).from_cache);
  CHECK(second.warnings().empty());
  CHECK(second.level(1).content_hash == first.level(1).content_hash);
  CHECK(second.finite(1).realization() == first.finite(1).realization());

  {
    std::ifstream in(dir / "level1.json");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    auto pos = text.find("[1,0,");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "[0,1,");
    std::ofstream(dir / "level1.json") << text;
  }
  Tower third(1, o);
  CHECK(!third.level(1).from_cache);
  REQUIRE(third.warnings().size() == 1);
  CHECK(third.warnings()[0].find("content hash") != std::string::npos);
  CHECK(third.level(1).content_hash == first.level(1).content_hash);

  // A changed lower level invalidates the one above.
  {
    std::ifstream in(dir / "level0.json");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    text.replace(text.find("\"format_version\":1"), 18, "\"format_version\":9");
    std::ofstream(dir / "level0.json") << text;
  }
  Tower fourth(1, o);
  CHECK(fourth.warnings().size() == 1);
  CHECK(fourth.level(1).from_cache);

  std::ofstream(dir / "blocker") << "x";
  TowerOptions bad;
  bad.cache_dir = dir / "blocker" / "sub";
  CHECK_THROWS_AS(Tower(0, bad), InputError);
  fs::remove_all(dir);
}

TEST_CASE("inner ultrahomogeneity witnesses for every partial automorphism of S3") {
  const Tower& t = shared_tower();
  const FiniteGroup& G = t.finite(0);
  std::size_t cases = 0;
  auto subs = all_subgroups(G);
  for (const auto& H : subs)
    for (const auto& K : subs) {
      if (H.size() != K.size()) continue;
      auto gens = G.generating_set(H);
      for_each_subgroup_isomorphism(G, H, K, [&](const std::vector<Elem>& f) {
        std::vector<std::pair<Elem, Elem>> pairs;
        for (Elem g : gens) {
          auto i = std::lower_bound(H.begin(), H.end(), g) - H.begin();
          pairs.emplace_back(g, f[i]);
        }
        auto p = validate_partial_automorphism(G, pairs);
        auto cert = inner_uh_witness(t, 0, p);
        CHECK(cert.verify());
        CHECK(cert.witness.degree() == 6);
        CHECK(cert.equations.size() == H.size());
        ++cases;
        return true;
      });
    }
  // 1 + 3·3 + 2 + 6 isomorphisms between equal-order subgroups.
  CHECK(cases == 18);

  auto id = validate_partial_automorphism(G, {});
  CHECK(inner_uh_witness(t, 0, id).witness.is_identity());
  CHECK_THROWS_AS(inner_uh_witness(t, 2, id), InputError);
}

TEST_CASE("inner ultrahomogeneity witness at level 1") {
  const Tower& t = shared_tower();
  const FiniteGroup& G = t.finite(1);
  Elem a = t.index_of(1, Perm::from_cycles(6, {{0, 1}}));
  Elem b = t.index_of(1, Perm::from_cycles(6, {{2, 3}}));
  auto p = validate_partial_automorphism(G, {{a, b}, {b, a}});
  auto cert = inner_uh_witness(t, 1, p);
  CHECK(cert.witness.degree() == 720);
  CHECK(cert.verify());
}

TEST_CASE("conjugacy of equal-order elements one level up") {
  const Tower& t = shared_tower();
  Perm a = Perm::from_cycles(3, {{0, 1}}), b = Perm::from_cycles(3, {{0, 2}});
  auto cert = conjugacy_witness_same_order(t, 0, a, b);
  CHECK(cert.verify());
  CHECK(conjugate(t.up(0, a), cert.witness) == t.up(0, b));
  CHECK(conjugacy_witness_same_order(t, 0, a, a).witness.is_identity());
  CHECK_THROWS_AS(conjugacy_witness_same_order(t, 0, a, Perm::from_cycles(3, {{0, 1, 2}})), InputError);

  Perm x = Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), y = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(x.cycle_type() != y.cycle_type());
  auto c = conjugacy_witness_same_order(t, 1, x, y);
  CHECK(c.verify());

  std::mt19937 rng(5);
  std::size_t done = 0;
  for (std::size_t n : {0u, 1u}) {
    const auto& els = t.finite(n).realization();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    while (done < (n == 0 ? 200u : 1000u)) {
      const Perm& u = els[pick(rng)];
      const Perm& v = els[pick(rng)];
      if (u.order() != v.order()) continue;
      auto w = conjugacy_witness_same_order(t, n, u, v);
      CHECK(conjugate(t.up(n, u), w.witness) == t.up(n, v));
      ++done;
    }
  }
}

TEST_CASE("nth roots") {
  const Tower& t = shared_tower();
  Perm g = Perm::from_cycles(3, {{0, 1}});
  CHECK(nth_root(t, 0, g, 1).h == g);
  auto r2 = nth_root(t, 0, g, 2);
  CHECK(r2.h.order() == 4);
  CHECK(r2.h.pow(2) == r2.g_image);
  CHECK(r2.level == 2);  // three transpositions in Sym(6) have no square root

  Perm three = Perm::from_cycles(6, {{0, 1, 2}});
  auto r4 = nth_root(t, 1, three, 4);
  CHECK(r4.h.pow(4) == r4.g_image);
  CHECK(12 % r4.h.order() == 0);
  CHECK(r4.level == 1);

  CHECK_THROWS_AS(nth_root(t, 1, Perm::from_cycles(6, {{0, 1, 2, 3}}), 8), PreconditionError);
  CHECK_THROWS_AS(nth_root(t, 0, g, 361), CapExceeded);
  CHECK_THROWS_AS(nth_root(t, 0, g, 0), InputError);

  // A root exists at some level exactly when the part of k built from primes
  // dividing m divides the number of m-cycles in the level-2 image.
  std::mt19937 rng(11);
  const auto& els = t.finite(1).realization();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const Perm& x = els[pick(rng)];
    std::uint64_t m = x.order();
    std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(2, 720 / m)(rng);
    bool expected = (720 / m) % part_of(k, m) == 0;
    bool found = true;
    try {
      auto r = nth_root(t, 1, x, k);
      CHECK(r.h.pow(static_cast<long long>(k)) == r.g_image);
      CHECK(r.g_image == t.lift(1, r.level, x));
    } catch (const PreconditionError&) {
      found = false;
    }
    CAPTURE(m);
    CAPTURE(k);
    CHECK(found == expected);
  }
}

TEST_CASE("escape witnesses") {
  const Tower& t = shared_tower();
  Perm s = Perm::from_cycles(3, {{0, 1}}), r = Perm::from_cycles(3, {{0, 1, 2}});
  auto e = escape_witness(t, 0, {s}, r);
  CHECK(e.certificate.verify());
  CHECK(e.subgroup.size() == 2);
  CHECK(e.degree == 18);
  CHECK(e.b_twin != e.b_image);
  CHECK(conjugate(e.b_image, e.certificate.witness) != e.b_image);

  auto empty = escape_witness(t, 0, {}, s);
  CHECK(empty.certificate.verify());
  CHECK(empty.degree == 36);
  CHECK_THROWS_AS(escape_witness(t, 0, {s, r}, r), PreconditionError);

  std::vector<Perm> s5{Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{0, 1, 2, 3, 4}})};
  auto big = escape_witness(t, 1, s5, Perm::from_cycles(6, {{4, 5}}));
  CHECK(big.subgroup.size() == 120);
  CHECK(big.degree == 4320);
  CHECK(big.certificate.verify());
  Caps small;
  small.neumann_degree = 1000;
  CHECK_THROWS_AS(escape_witness(t, 1, s5, Perm::from_cycles(6, {{4, 5}}), small), CapExceeded);
}
