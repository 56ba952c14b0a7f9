#include <doctest.h>

#include <set>

#include "ultrahom/abelian.hpp"
#include "ultrahom/amalgam.hpp"
#include "ultrahom/construct_json.hpp"
#include "ultrahom/corpus.hpp"
#include "ultrahom/hall.hpp"

using namespace ultrahom;

namespace {

GroupHomomorphism embedding(const FiniteGroup& A, const FiniteGroup& B, std::vector<Elem> map) {
  return {A, B, std::move(map)};
}

GroupHomomorphism identity_hom(const FiniteGroup& G) {
  std::vector<Elem> m(G.order());
  for (Elem i = 0; i < G.order(); ++i) m[i] = i;
  return {G, G, m};
}

}  // namespace

TEST_CASE("regular representation") {
  auto triv = regular_representation(FiniteGroup::trivial());
  CHECK(triv.degree() == 1);
  CHECK(triv(0).is_identity());
  auto z3 = regular_representation(FiniteGroup::cyclic(3));
  CHECK(z3(1) == Perm::from_cycles(3, {{0, 1, 2}}));
  FiniteGroup s3 = dihedral(3);
  auto r = regular_representation(s3);
  for (Elem g = 0; g < 6; ++g) {
    CHECK(r(g).order() == s3.element_order(g));
    if (g) CHECK(r(g).fixed_point_count() == 0);
    if (s3.element_order(g) == 2) CHECK(r(g).cycle_type() == std::vector<std::size_t>{2, 2, 2});
    for (Elem h = 0; h < 6; ++h) CHECK(compose(r(g), r(h)) == r(s3.mul(g, h)));
    CHECK(r.preimage(r(g)) == g);
  }
  CHECK(r.image_group().order() == 6);
  Caps small;
  small.degree = 5;
  CHECK_THROWS_AS(regular_representation(s3, small), CapExceeded);
}

TEST_CASE("hall witness examples") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  auto inv = hall_witness(validate_partial_automorphism(z4, {{1, 3}}));
  CHECK(inv.certificate.equations.size() == 4);
  CHECK(inv.certificate.verify());
  CHECK(conjugate(inv.embedding(1), inv.certificate.witness) == inv.embedding(3));

  auto id = hall_witness(validate_partial_automorphism(z4, {{2, 2}}));
  CHECK(id.certificate.witness.is_identity());

  FiniteGroup s3 = dihedral(3);  // element 1 = x, element 3 = a x: two reflections
  REQUIRE(s3.element_order(1) == 2);
  REQUIRE(s3.element_order(3) == 2);
  auto refl = hall_witness(validate_partial_automorphism(s3, {{1, 3}}));
  CHECK(refl.certificate.verify());
  CHECK(refl.certificate.witness.degree() == 6);
}

TEST_CASE("hall witness on every partial automorphism of small groups") {
  std::size_t cases = 0;
  for (const FiniteGroup& G : small_group_corpus(16)) {
    auto rho = regular_representation(G);
    auto subs = all_subgroups(G);
    for (const auto& H : subs)
      for (const auto& K : subs) {
        if (H.size() != K.size() || H.size() > 8) continue;
        for_each_subgroup_isomorphism(G, H, K, [&](const std::vector<Elem>& f) {
          std::vector<std::pair<Elem, Elem>> pairs;
          for (Elem h : G.generating_set(H))
            pairs.emplace_back(h, f[std::lower_bound(H.begin(), H.end(), h) - H.begin()]);
          auto pa = validate_partial_automorphism(G, pairs);
          for (std::size_t i = 0; i < H.size(); ++i) REQUIRE(pa(H[i]) == f[i]);
          auto cert = hall_witness(rho, pa);
          CHECK(!cert.first_failure());
          ++cases;
          return true;
        });
      }
  }
  CHECK(cases > 1000);
}

TEST_CASE("n-eppa closure") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  auto single = n_eppa_closure(z4, {validate_partial_automorphism(z4, {{1, 1}})});
  CHECK(single.B.order() == 4);
  CHECK(single.automorphisms[0].witness.is_identity());

  auto two = n_eppa_closure(z4, {validate_partial_automorphism(z4, {{1, 3}}),
                                 validate_partial_automorphism(z4, {{2, 2}})});
  for (const auto& c : two.automorphisms) CHECK(c.verify());
  CHECK(two.B.order() % 4 == 0);

  FiniteGroup v4 = AbelianGroup::product({2, 2}).to_finite_group();  // (1,0) = 2, (0,1) = 1
  auto swap = n_eppa_closure(v4, {validate_partial_automorphism(v4, {{2, 1}, {1, 2}})});
  const auto& w = swap.automorphisms[0];
  CHECK(w.verify());
  CHECK(conjugate(swap.embedding(2), w.witness) == swap.embedding(1));
  CHECK(conjugate(swap.embedding(1), w.witness) == swap.embedding(2));
}

TEST_CASE("neumann amalgam examples") {
  FiniteGroup z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4);
  auto same = neumann_amalgam(z4, z4, z4, identity_hom(z4), identity_hom(z4));
  CHECK(same.D.degree() == 4);
  CHECK(same.D.order() == 4);

  auto two = neumann_amalgam(z2, z4, z4, embedding(z2, z4, {0, 2}), embedding(z2, z4, {0, 2}));
  CHECK(two.D.degree() == 8);
  CHECK(two.intersection_checked);
  CHECK(two.intersection_exact);
  std::size_t shared = 0;
  for (Elem b = 0; b < 4; ++b)
    for (Elem c = 0; c < 4; ++c) shared += two.embed_B(b) == two.embed_C(c);
  CHECK(shared == 2);

  FiniteGroup one = FiniteGroup::trivial();
  auto free = neumann_amalgam(one, z2, z2, embedding(one, z2, {0}), embedding(one, z2, {0}));
  CHECK(free.D.degree() == 4);
  CHECK(free.intersection_exact);
  CHECK(free.embed_B(1) != free.embed_C(1));

  Caps tight;
  tight.neumann_degree = 7;
  CHECK_THROWS_AS(neumann_amalgam(z2, z4, z4, embedding(z2, z4, {0, 2}), embedding(z2, z4, {0, 2}), tight),
                  CapExceeded);
  CHECK_THROWS_AS(neumann_amalgam(z2, z4, z4, embedding(z2, z4, {0, 1}), embedding(z2, z4, {0, 2})),
                  InputError);
}

TEST_CASE("neumann amalgam over every common subgroup of small groups") {
  auto corpus = small_group_corpus(8);
  std::size_t cases = 0;
  for (const FiniteGroup& B : corpus)
    for (const FiniteGroup& C : corpus)
      for (const auto& H : all_subgroups(B)) {
        GroupHomomorphism iAB = subgroup_inclusion(B, H);
        for (const auto& K : all_subgroups(C)) {
          if (K.size() != H.size()) continue;
          GroupHomomorphism iKC = subgroup_inclusion(C, K);
          auto f = find_isomorphism(iAB.source, iKC.source);
          if (f.empty()) continue;
          std::vector<Elem> m(H.size());
          for (Elem a = 0; a < H.size(); ++a) m[a] = K[f[a]];
          auto r = neumann_amalgam(iAB.source, B, C, iAB, GroupHomomorphism{iAB.source, C, m});
          CHECK(r.D.degree() == B.order() * C.order() / H.size());
          CHECK(r.intersection_exact);
          ++cases;
        }
      }
  CHECK(cases > 500);
}

TEST_CASE("amalgam with automorphisms") {
  FiniteGroup z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4);
  FiniteGroup v4 = AbelianGroup::product({2, 2}).to_finite_group();  // 1 = (0,1), 2 = (1,0), 3 = (1,1)
  auto iAB = embedding(z2, z4, {0, 2});
  auto iAC = embedding(z2, v4, {0, 3});
  auto p = validate_partial_automorphism(z4, {{1, 3}});
  auto q = validate_partial_automorphism(v4, {{1, 2}, {2, 1}});
  auto r = eppa_amalgam_with_automorphisms(z2, z4, v4, iAB, iAC, {p}, {q});
  REQUIRE(r.complete);
  CHECK(r.stages.size() == 5);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].verify());
  CHECK(r.witnesses[0].equations.size() == 8);
  CHECK(r.intersection_exact);
  CHECK(conjugate(r.embed_B(1), r.witnesses[0].witness) == r.embed_B(3));
  CHECK(conjugate(r.embed_C(1), r.witnesses[0].witness) == r.embed_C(2));

  FiniteGroup one = FiniteGroup::trivial();
  auto e = embedding(one, z2, {0});
  auto idp = validate_partial_automorphism(z2, {{1, 1}});
  auto centr = eppa_amalgam_with_automorphisms(one, z2, z2, e, e, {idp}, {idp});
  REQUIRE(centr.complete);
  const Perm& g = centr.witnesses[0].witness;
  CHECK(compose(g, centr.embed_B(1)) == compose(centr.embed_B(1), g));
  CHECK(compose(g, centr.embed_C(1)) == compose(centr.embed_C(1), g));

  auto plain = eppa_amalgam_with_automorphisms(z2, z4, z4, iAB, iAB, {}, {});
  CHECK(plain.D.degree() == 8);

  auto bad = validate_partial_automorphism(v4, {{3, 3}});
  CHECK_THROWS_AS(eppa_amalgam_with_automorphisms(z2, z4, v4, iAB, embedding(z2, v4, {0, 1}), {p}, {bad}),
                  InputError);

  Caps tight;
  tight.neumann_degree = 8;
  auto partial = eppa_amalgam_with_automorphisms(z2, z4, v4, iAB, iAC, {p}, {q}, tight);
  CHECK(!partial.complete);
  CHECK(partial.stages.size() == 3);
  CHECK(!partial.stopped.empty());
}

TEST_CASE("commuting witnesses") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  auto inv = commuting_witnesses(z3, {{0, 2, 1}});
  CHECK(inv.verify());
  auto id = commuting_witnesses(z3, {{0, 1, 2}});
  CHECK(id.certificates[0].witness.is_identity());

  FiniteGroup v4 = AbelianGroup::product({2, 2}).to_finite_group();  // 1 = (0,1), 2 = (1,0), 3 = (1,1)
  std::vector<Elem> t{0, 1, 3, 2};  // (1,0) ↦ (1,1), fixes the line through (0,1)
  auto two = commuting_witnesses(v4, {t, {0, 1, 2, 3}, t});
  REQUIRE(two.complete);
  CHECK(two.certificates.size() == 3);
  CHECK(two.verify());

  CHECK_THROWS_AS(commuting_witnesses(v4, {{0, 1, 2, 3}, t}), PreconditionError);
  CHECK_THROWS_AS(commuting_witnesses(v4, {t, {0, 2, 1, 3}}), PreconditionError);
}

TEST_CASE("commuting witnesses for a family on (Z/2)^4") {
  // v = (v1, v2) with v1, v2 in (Z/2)^2; sigma_f(v1, v2) = (v1 + f v2, v2).
  auto G = AbelianGroup::product({2, 2, 2, 2});
  FiniteGroup A = G.to_finite_group();
  auto sigma = [&](int f00, int f01, int f10, int f11) {
    std::vector<Elem> s(16);
    for (Elem x = 0; x < 16; ++x) {
      AbVec v = G.element(x);
      v[0] = (v[0] + f00 * v[2] + f01 * v[3]) % 2;
      v[1] = (v[1] + f10 * v[2] + f11 * v[3]) % 2;
      s[x] = static_cast<Elem>(G.index(v));
    }
    return s;
  };
  auto r = commuting_witnesses(A, {sigma(1, 0, 0, 1), sigma(1, 0, 0, 0), sigma(0, 1, 0, 0)});
  CHECK(r.verify());
  MESSAGE("stages " << r.stage_orders.size() << (r.complete ? " complete" : " stopped: " + r.stopped));
}

TEST_CASE("odd prime abelian builder") {
  auto z3 = odd_prime_abelian_builder(AbelianGroup::product({3}), 3);
  CHECK(z3.checks.all_passed());
  CHECK(z3.sigma_order == 2);
  CHECK(z3.B_order % 2 == 0);
  auto z10 = odd_prime_abelian_builder(AbelianGroup::product({5, 2}), 5);
  CHECK(z10.checks.all_passed());
  CHECK(z10.B_order % 8 == 0);
  auto z9 = odd_prime_abelian_builder(AbelianGroup::product({9}), 3);
  CHECK(z9.sigma_order == 6);
  CHECK(z9.B_order % 6 == 0);
  CHECK(z9.checks.all_passed());
  CHECK_THROWS_AS(odd_prime_abelian_builder(AbelianGroup::product({4}), 2), InputError);
  CHECK_THROWS_AS(odd_prime_abelian_builder(AbelianGroup::product({9}), 5), InputError);
}

TEST_CASE("certificate json") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  auto hw = hall_witness(validate_partial_automorphism(z4, {{1, 3}}));
  auto back = certificate_from_json(certificate_to_json(hw.certificate));
  CHECK(back.witness == hw.certificate.witness);
  CHECK(back.equations == hw.certificate.equations);
  CHECK(back.verify());
  CHECK(back.ambient.is_full_symmetric());
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"witness", 3}}), InputError);
  auto rep = representation_from_json(representation_to_json(hw.embedding));
  CHECK(rep(1) == hw.embedding(1));
}
