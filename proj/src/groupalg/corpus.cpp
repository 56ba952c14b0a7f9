#include "ultrahom/corpus.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ultrahom/abelian.hpp"
#include "ultrahom/error.hpp"

namespace ultrahom {

namespace {

FiniteGroup abelian(std::vector<std::int64_t> moduli, std::string name) {
  return AbelianGroup::normalized(moduli).to_finite_group().renamed(std::move(name));
}

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  return direct_product(a, b).group.renamed(std::move(name));
}

Perm full_cycle(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
  return Perm::from_cycles(n, {c});
}

// Matrices over F_3 acting on the eight nonzero vectors of F_3^2.
FiniteGroup special_linear_2_3() {
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto perm_of = [&](int a, int b, int c, int d) {
    std::vector<Point> img;
    for (auto [x, y] : vecs) {
      std::pair<int, int> w{(a * x + b * y) % 3, (c * x + d * y) % 3};
      img.push_back(static_cast<Point>(std::find(vecs.begin(), vecs.end(), w) - vecs.begin()));
    }
    return Perm(img);
  };
  return FiniteGroup::from_permutations(8, {perm_of(1, 1, 0, 1), perm_of(1, 0, 1, 1)}, 100, "SL(2,3)");
}

// Automorphism of Z/m1 × Z/m2 (index a·m2 + b) given by a map on coordinates.
std::vector<Elem> coordinate_map(int m1, int m2, const std::function<std::pair<int, int>(int, int)>& f) {
  std::vector<Elem> act(static_cast<std::size_t>(m1 * m2));
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m2; ++b) {
      auto [x, y] = f(a, b);
      act[static_cast<std::size_t>(a * m2 + b)] = static_cast<Elem>(((x % m1 + m1) % m1) * m2 + ((y % m2 + m2) % m2));
    }
  return act;
}

}  // namespace

FiniteGroup dihedral(std::size_t n) {
  return metacyclic(n, 2, n - 1, 0, n == 3 ? "S3" : "D" + std::to_string(n));
}

FiniteGroup dicyclic(std::size_t n) {
  return metacyclic(2 * n, 2, 2 * n - 1, n, n == 2 ? "Q8" : "Dic" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<Perm> gens{full_cycle(n)};
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  return FiniteGroup::from_permutations(n, gens, 100'000, "S" + std::to_string(n));
}

FiniteGroup alternating_group(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 2 < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i + 2)}}));
  return FiniteGroup::from_permutations(n, gens, 100'000, "A" + std::to_string(n));
}

std::vector<FiniteGroup> small_group_corpus(std::size_t max_order) {
  if (max_order > 24) throw CapExceeded("the small group corpus stops at order 24");
  const FiniteGroup Z2 = FiniteGroup::cyclic(2), Z3 = FiniteGroup::cyclic(3), Z4 = FiniteGroup::cyclic(4);
  const FiniteGroup S3 = dihedral(3), D4 = dihedral(4), Q8 = dicyclic(2);
  std::vector<FiniteGroup> all;
  auto add = [&](FiniteGroup g) {
    if (g.order() <= max_order) all.push_back(std::move(g));
  };
  add(FiniteGroup::trivial().renamed("1"));
  for (std::size_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) add(FiniteGroup::cyclic(p));
  add(FiniteGroup::cyclic(4));
  add(abelian({2, 2}, "Z2xZ2"));
  add(FiniteGroup::cyclic(6));
  add(S3);
  add(FiniteGroup::cyclic(8));
  add(abelian({2, 4}, "Z2xZ4"));
  add(abelian({2, 2, 2}, "Z2^3"));
  add(D4);
  add(Q8);
  add(FiniteGroup::cyclic(9));
  add(abelian({3, 3}, "Z3xZ3"));
  add(FiniteGroup::cyclic(10));
  add(dihedral(5));
  add(FiniteGroup::cyclic(12));
  add(abelian({2, 6}, "Z2xZ6"));
  add(alternating_group(4));
  add(dihedral(6));
  add(dicyclic(3));
  add(FiniteGroup::cyclic(14));
  add(dihedral(7));
  add(FiniteGroup::cyclic(15));
  if (max_order >= 16) {
    add(FiniteGroup::cyclic(16));
    add(abelian({4, 4}, "Z4xZ4"));
    add(abelian({2, 8}, "Z2xZ8"));
    add(abelian({2, 2, 4}, "Z2xZ2xZ4"));
    add(abelian({2, 2, 2, 2}, "Z2^4"));
    add(dihedral(8));
    add(metacyclic(8, 2, 3, 0, "SD16"));
    add(dicyclic(4).renamed("Q16"));
    add(metacyclic(8, 2, 5, 0, "M16"));
    add(metacyclic(4, 4, 3, 0, "Z4:Z4"));
    add(product(Z2, D4, "Z2xD4"));
    add(product(Z2, Q8, "Z2xQ8"));
    FiniteGroup z4z2 = AbelianGroup::product({4, 2}).to_finite_group();
    add(semidirect_product(z4z2, Z2, {1},
                           {coordinate_map(4, 2, [](int a, int b) { return std::pair{a, b + a}; })},
                           "(Z4xZ2):Z2"));
    add(semidirect_product(z4z2, Z2, {1},
                           {coordinate_map(4, 2, [](int a, int b) { return std::pair{a + 2 * b, b}; })},
                           "Z4oD4"));
  }
  if (max_order >= 18) {
    add(FiniteGroup::cyclic(18));
    add(abelian({3, 6}, "Z3xZ6"));
    add(dihedral(9));
    add(product(Z3, S3, "Z3xS3"));
    FiniteGroup z3z3 = AbelianGroup::product({3, 3}).to_finite_group();
    add(semidirect_product(z3z3, Z2, {1},
                           {coordinate_map(3, 3, [](int a, int b) { return std::pair{-a, -b}; })},
                           "(Z3xZ3):Z2"));
  }
  if (max_order >= 20) {
    add(FiniteGroup::cyclic(20));
    add(abelian({2, 10}, "Z2xZ10"));
    add(dihedral(10));
    add(dicyclic(5));
    add(metacyclic(5, 4, 2, 0, "F20"));
  }
  if (max_order >= 21) {
    add(FiniteGroup::cyclic(21));
    add(metacyclic(7, 3, 2, 0, "Z7:Z3"));
  }
  if (max_order >= 22) {
    add(FiniteGroup::cyclic(22));
    add(dihedral(11));
  }
  if (max_order >= 24) {
    add(FiniteGroup::cyclic(24));
    add(abelian({2, 12}, "Z2xZ12"));
    add(abelian({2, 2, 6}, "Z2xZ2xZ6"));
    add(symmetric_group(4));
    add(special_linear_2_3());
    add(metacyclic(3, 8, 2, 0, "Z3:Z8"));
    add(dicyclic(6));
    add(dihedral(12));
    add(product(Z2, alternating_group(4), "Z2xA4"));
    add(product(Z4, S3, "Z4xS3"));
    add(product(Z2, dicyclic(3), "Z2xDic3"));
    add(product(Z3, D4, "Z3xD4"));
    add(product(Z3, Q8, "Z3xQ8"));
    add(product(abelian({2, 2}, "Z2xZ2"), S3, "Z2xZ2xS3"));
    // D4 = <a, x> with a = element 2, x = element 1; a inverts Z3, x fixes it.
    add(semidirect_product(Z3, D4, {2, 1}, {{0, 2, 1}, {0, 1, 2}}, "Z3:D4"));
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const FiniteGroup& a, const FiniteGroup& b) { return a.order() < b.order(); });
  return all;
}

std::vector<NamedPermGroup> permutation_corpus() {
  std::vector<NamedPermGroup> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    out.push_back({"Sym(" + std::to_string(n) + ")", PermGroup::symmetric(n)});
    std::vector<Perm> gens{full_cycle(n), Perm::from_cycles(n, {{0, 1}})};
    out.push_back({"S" + std::to_string(n), PermGroup(n, gens)});
  }
  for (std::size_t n = 4; n <= 7; ++n) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i + 2 < n; ++i)
      gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i + 2)}}));
    out.push_back({"A" + std::to_string(n), PermGroup(n, gens)});
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<Point> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
    out.push_back({"D" + std::to_string(n) + " on " + std::to_string(n) + " points",
                   PermGroup(n, {full_cycle(n), Perm(refl)})});
    out.push_back({"C" + std::to_string(n), PermGroup(n, {full_cycle(n)})});
  }
  for (std::size_t p : {5, 7, 11}) {
    std::size_t root = p == 5 ? 2 : p == 7 ? 3 : 2;
    std::vector<Point> mult(p);
    for (std::size_t x = 0; x < p; ++x) mult[x] = static_cast<Point>(x * root % p);
    out.push_back({"AGL(1," + std::to_string(p) + ")", PermGroup(p, {full_cycle(p), Perm(mult)})});
  }
  out.push_back({"PSL(3,2)", PermGroup(7, {Perm::parse_cycles(7, "(1,2,3,4,5,6,7)"),
                                           Perm::parse_cycles(7, "(1,2)(3,6)")})});
  out.push_back({"S3xS3", PermGroup(6, {Perm::parse_cycles(6, "(1,2,3)"), Perm::parse_cycles(6, "(1,2)"),
                                        Perm::parse_cycles(6, "(4,5,6)"), Perm::parse_cycles(6, "(4,5)")})});
  out.push_back({"S3xS4", PermGroup(7, {Perm::parse_cycles(7, "(1,2,3)"), Perm::parse_cycles(7, "(1,2)"),
                                        Perm::parse_cycles(7, "(4,5,6,7)"), Perm::parse_cycles(7, "(4,5)")})});
  out.push_back({"S5xS2", PermGroup(7, {Perm::parse_cycles(7, "(1,2,3,4,5)"), Perm::parse_cycles(7, "(1,2)"),
                                        Perm::parse_cycles(7, "(6,7)")})});
  out.push_back({"S2 wr S3", PermGroup(6, {Perm::parse_cycles(6, "(1,2)"), Perm::parse_cycles(6, "(1,3,5)(2,4,6)"),
                                           Perm::parse_cycles(6, "(1,3)(2,4)")})});
  out.push_back({"S2 wr S4", PermGroup(8, {Perm::parse_cycles(8, "(1,2)"),
                                           Perm::parse_cycles(8, "(1,3,5,7)(2,4,6,8)"),
                                           Perm::parse_cycles(8, "(1,3)(2,4)")})});
  for (const FiniteGroup& G : small_group_corpus(24)) {
    if (G.order() < 2) continue;
    std::vector<Perm> gens;
    for (Elem g : G.generating_set()) {
      std::vector<Point> img(G.order());
      for (Elem a = 0; a < G.order(); ++a) img[a] = G.mul(g, a);
      gens.emplace_back(img);
    }
    out.push_back({"regular " + G.name(), PermGroup(G.order(), gens)});
  }
  return out;
}

}  // namespace ultrahom
