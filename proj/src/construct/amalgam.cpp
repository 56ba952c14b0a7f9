#include "ultrahom/amalgam.hpp"

#include <limits>
#include <set>
#include <unordered_set>

#include "ultrahom/error.hpp"
#include "ultrahom/hall.hpp"

namespace ultrahom {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

/// X = ⊔ A·s: coset index and A-coordinate of every element.
struct CosetSplit {
  std::vector<Elem> reps;
  std::vector<std::uint32_t> coset;
  std::vector<Elem> a_part;
};

CosetSplit split(const FiniteGroup& X, const GroupHomomorphism& i) {
  const std::size_t a_order = i.source.order();
  CosetSplit c;
  c.coset.assign(X.order(), kUnset);
  c.a_part.assign(X.order(), 0);
  for (Elem x = 0; x < X.order(); ++x) {
    if (c.coset[x] != kUnset) continue;
    for (Elem a = 0; a < a_order; ++a) {
      Elem y = X.mul(i(a), x);
      c.coset[y] = static_cast<std::uint32_t>(c.reps.size());
      c.a_part[y] = a;
    }
    c.reps.push_back(x);
  }
  return c;
}

void check_embedding(const GroupHomomorphism& i, const FiniteGroup& A, const FiniteGroup& X, const char* what) {
  if (i.source.order() != A.order() || i.target.order() != X.order() || i.map.size() != A.order())
    throw InputError(std::string(what) + " has the wrong source or target");
  for (Elem y : i.map)
    if (y >= X.order()) throw InputError(std::string(what) + " maps outside its target");
  if (!i.is_homomorphism() || !i.is_injective())
    throw InputError(std::string(what) + " is not an injective homomorphism");
}

bool images_meet_in(const std::vector<Perm>& left, const std::vector<Perm>& right, const std::vector<Perm>& base) {
  std::unordered_set<Perm, PermHash> r(right.begin(), right.end());
  std::set<Perm> meet, expected(base.begin(), base.end());
  for (const Perm& p : left)
    if (r.count(p)) meet.insert(p);
  return meet == expected;
}

}  // namespace

AmalgamResult neumann_amalgam(const FiniteGroup& A, const FiniteGroup& B, const FiniteGroup& C,
                              const GroupHomomorphism& iAB, const GroupHomomorphism& iAC, const Caps& caps) {
  check_embedding(iAB, A, B, "embedding of A into B");
  check_embedding(iAC, A, C, "embedding of A into C");
  CosetSplit sb = split(B, iAB), sc = split(C, iAC);
  const std::size_t S = sb.reps.size(), T = sc.reps.size();
  const std::size_t degree = A.order() * S * T;
  if (degree > caps.neumann_degree)
    throw CapExceeded("permutational product needs " + std::to_string(degree) + " points, above the cap " +
                      std::to_string(caps.neumann_degree));
  auto point = [&](Elem a, std::size_t s, std::size_t t) { return static_cast<Point>((a * S + s) * T + t); };

  std::vector<Perm> b_images, c_images;
  for (Elem b = 0; b < B.order(); ++b) {
    std::vector<Point> img(degree);
    for (Elem a = 0; a < A.order(); ++a)
      for (std::size_t s = 0; s < S; ++s) {
        Elem x = B.mul(b, B.mul(iAB(a), sb.reps[s]));
        for (std::size_t t = 0; t < T; ++t) img[point(a, s, t)] = point(sb.a_part[x], sb.coset[x], t);
      }
    b_images.push_back(Perm::unchecked(std::move(img)));
  }
  for (Elem c = 0; c < C.order(); ++c) {
    std::vector<Point> img(degree);
    for (Elem a = 0; a < A.order(); ++a)
      for (std::size_t t = 0; t < T; ++t) {
        Elem x = C.mul(c, C.mul(iAC(a), sc.reps[t]));
        for (std::size_t s = 0; s < S; ++s) img[point(a, s, t)] = point(sc.a_part[x], s, sc.coset[x]);
      }
    c_images.push_back(Perm::unchecked(std::move(img)));
  }

  AmalgamResult out;
  std::vector<Perm> gens;
  for (Elem b : B.generating_set()) gens.push_back(b_images[b]);
  for (Elem c : C.generating_set()) gens.push_back(c_images[c]);
  if (gens.empty()) gens.push_back(Perm(degree));
  out.D = PermGroup(degree, gens);
  out.embed_B = PermRepresentation(B, degree, b_images);
  out.embed_C = PermRepresentation(C, degree, c_images);
  if (!out.embed_B.is_homomorphism() || !out.embed_B.is_injective() || !out.embed_C.is_homomorphism() ||
      !out.embed_C.is_injective())
    throw InternalError("permutational product embedding is not faithful");
  for (Elem a = 0; a < A.order(); ++a) {
    out.base_image.push_back(b_images[iAB(a)]);
    if (b_images[iAB(a)] != c_images[iAC(a)]) throw InternalError("the two images of A differ");
  }
  if (B.order() * C.order() <= caps.pairwise_check) {
    out.intersection_checked = true;
    out.intersection_exact = images_meet_in(b_images, c_images, out.base_image);
  }
  out.stages.push_back("permutational product");
  return out;
}

AmalgamResult eppa_amalgam_with_automorphisms(const FiniteGroup& A, const FiniteGroup& B, const FiniteGroup& C,
                                              const GroupHomomorphism& iAB, const GroupHomomorphism& iAC,
                                              const std::vector<PartialAutomorphism>& ps,
                                              const std::vector<PartialAutomorphism>& qs, const Caps& caps) {
  if (ps.size() != qs.size()) throw InputError("p and q lists differ in length");
  if (ps.empty()) return neumann_amalgam(A, B, C, iAB, iAC, caps);
  check_embedding(iAB, A, B, "embedding of A into B");
  check_embedding(iAC, A, C, "embedding of A into C");
  std::vector<Elem> from_B(B.order(), kNoImage), from_C(C.order(), kNoImage);
  for (Elem a = 0; a < A.order(); ++a) {
    from_B[iAB(a)] = a;
    from_C[iAC(a)] = a;
  }
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (ps[k].ambient.order() != B.order() || qs[k].ambient.order() != C.order())
      throw InputError("partial automorphism of the wrong group");
    for (Elem a = 0; a < A.order(); ++a) {
      Elem pb = ps[k](iAB(a)), qc = qs[k](iAC(a));
      if (pb == kNoImage || qc == kNoImage || from_B[pb] == kNoImage || from_B[pb] != from_C[qc])
        throw InputError("p_" + std::to_string(k + 1) + " and q_" + std::to_string(k + 1) +
                         " do not restrict to the same automorphism of A");
    }
  }

  AmalgamResult out;
  std::string stage = "product B x C";
  try {
    DirectProduct P = direct_product(B, C, caps.finite_group);
    out.stages.push_back(stage);

    stage = "witnesses for p_k x q_k";
    PermRepresentation rho = regular_representation(P.group, caps);
    std::vector<Perm> gs;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (auto [x, y] : ps[k].pairs) pairs.emplace_back(P.pair(x, 0), P.pair(y, 0));
      for (auto [x, y] : qs[k].pairs) pairs.emplace_back(P.pair(0, x), P.pair(0, y));
      gs.push_back(hall_witness(rho, validate_partial_automorphism(P.group, pairs)).witness);
    }
    out.stages.push_back(stage);

    stage = "extensions of B and C";
    const std::size_t M = P.group.order();
    const Perm idM(M);
    auto doubled = [&](const Perm& x, const Perm& y) {
      std::vector<Point> img(2 * M);
      for (std::size_t i = 0; i < M; ++i) {
        img[i] = x(static_cast<Point>(i));
        img[M + i] = static_cast<Point>(M + y(static_cast<Point>(i)));
      }
      return Perm::unchecked(std::move(img));
    };
    auto in_B = [&](Elem b) { return doubled(rho(P.pair(b, 0)), idM); };
    auto in_C = [&](Elem c) { return doubled(rho(P.pair(0, c)), idM); };
    std::vector<Perm> gg;
    for (const Perm& g : gs) gg.push_back(doubled(g, g));
    std::vector<Perm> bgens, cgens, ugens, uimages;
    for (Elem b : B.generating_set()) bgens.push_back(in_B(b));
    for (Elem c : C.generating_set()) cgens.push_back(in_C(c));
    for (Elem a : A.generating_set()) {
      ugens.push_back(in_B(iAB(a)));
      uimages.push_back(in_C(iAC(a)));
    }
    bgens.insert(bgens.end(), gg.begin(), gg.end());
    cgens.insert(cgens.end(), gg.begin(), gg.end());
    ugens.insert(ugens.end(), gg.begin(), gg.end());
    uimages.insert(uimages.end(), gg.begin(), gg.end());
    FiniteGroup Bbar = FiniteGroup::from_permutations(2 * M, bgens, caps.finite_group, "B-bar");
    FiniteGroup Cbar = FiniteGroup::from_permutations(2 * M, cgens, caps.finite_group, "C-bar");
    FiniteGroup U = FiniteGroup::from_permutations(2 * M, ugens, caps.finite_group, "U");
    std::vector<Elem> u_to_b(U.order());
    for (Elem u = 0; u < U.order(); ++u) {
      auto i = Bbar.index_of(U.realization()[u]);
      if (!i) throw InternalError("common subgroup is not inside B-bar");
      u_to_b[u] = *i;
    }
    std::vector<Elem> ugen_idx, uimg_idx;
    for (std::size_t i = 0; i < ugens.size(); ++i) {
      ugen_idx.push_back(*U.index_of(ugens[i]));
      uimg_idx.push_back(*Cbar.index_of(uimages[i]));
    }
    GroupHomomorphism iUB{U, Bbar, u_to_b};
    GroupHomomorphism iUC = [&] {
      try {
        return GroupHomomorphism::from_generator_images(U, Cbar, ugen_idx, uimg_idx);
      } catch (const InputError& e) {
        throw PreconditionError(std::string("<A, b_k> and <A, c_k> are not isomorphic: ") + e.what());
      }
    }();
    if (!iUC.is_injective()) throw PreconditionError("<A, b_k> -> <A, c_k> is not injective");
    out.stages.push_back(stage);

    stage = "permutational product of the extensions";
    AmalgamResult R = neumann_amalgam(U, Bbar, Cbar, iUB, iUC, caps);
    out.stages.push_back(stage);

    stage = "certificates";
    std::vector<Perm> eb, ec;
    for (Elem b = 0; b < B.order(); ++b) eb.push_back(R.embed_B(*Bbar.index_of(in_B(b))));
    for (Elem c = 0; c < C.order(); ++c) ec.push_back(R.embed_C(*Cbar.index_of(in_C(c))));
    const std::size_t degree = R.D.degree();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      Perm g = R.embed_B(*Bbar.index_of(gg[k]));
      if (g != R.embed_C(*Cbar.index_of(gg[k]))) throw InternalError("witness images disagree in D");
      WitnessCertificate cert;
      cert.ambient = R.D;
      cert.witness = g;
      cert.tag = "eppa amalgam";
      for (Elem b : ps[k].domain) cert.equations.emplace_back(eb[b], eb[ps[k](b)]);
      for (Elem c : qs[k].domain) cert.equations.emplace_back(ec[c], ec[qs[k](c)]);
      if (cert.first_failure()) throw InternalError("amalgam witness fails its equations");
      out.witnesses.push_back(std::move(cert));
    }
    for (Elem a = 0; a < A.order(); ++a) {
      out.base_image.push_back(eb[iAB(a)]);
      if (eb[iAB(a)] != ec[iAC(a)]) throw InternalError("the two images of A differ in D");
    }
    if (B.order() * C.order() <= caps.pairwise_check) {
      out.intersection_checked = true;
      out.intersection_exact = images_meet_in(eb, ec, out.base_image);
    }
    out.D = R.D;
    out.embed_B = PermRepresentation(B, degree, std::move(eb));
    out.embed_C = PermRepresentation(C, degree, std::move(ec));
    out.stages.push_back(stage);
  } catch (const CapExceeded& e) {
    out.complete = false;
    out.stopped = stage + ": " + e.what();
  }
  return out;
}

}  // namespace ultrahom
