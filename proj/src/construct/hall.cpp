#include "ultrahom/hall.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "ultrahom/error.hpp"

namespace ultrahom {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

/// Representatives of the right cosets H·x, in index order, least index first.
std::vector<Elem> right_coset_reps(const FiniteGroup& G, const std::vector<Elem>& H) {
  std::vector<std::uint32_t> which(G.order(), kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < G.order(); ++x) {
    if (which[x] != kUnset) continue;
    for (Elem h : H) which[G.mul(h, x)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  return reps;
}

std::vector<std::pair<Elem, Elem>> pairs_on_generators(const FiniteGroup& A, const std::vector<Elem>& sigma) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem g : A.generating_set()) pairs.emplace_back(g, sigma[g]);
  return pairs;
}

bool is_element_automorphism(const FiniteGroup& A, const std::vector<Elem>& s) {
  if (s.size() != A.order()) return false;
  std::vector<char> hit(A.order(), 0);
  for (Elem y : s) {
    if (y >= A.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Elem g : A.generating_set())
    for (Elem x = 0; x < A.order(); ++x)
      if (s[A.mul(g, x)] != A.mul(s[g], s[x])) return false;
  return true;
}

}  // namespace

WitnessCertificate hall_witness(const PermRepresentation& regular, const PartialAutomorphism& p) {
  const FiniteGroup& G = p.ambient;
  const std::size_t n = G.order();
  if (!regular.is_regular() || regular.source().order() != n)
    throw InputError("hall_witness needs the regular representation of the ambient group");
  const auto& D = p.domain;
  const auto& R = p.range;
  auto xs = right_coset_reps(G, D);
  auto ys = right_coset_reps(G, R);
  if (xs.size() != ys.size()) throw InternalError("coset counts of domain and range differ");

  std::vector<Point> beta(n, kUnset);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (Elem d : D) beta[G.mul(d, xs[i])] = G.mul(p(d), ys[i]);
  Perm b = Perm::unchecked(std::move(beta));

  // The generators in p.pairs decide the orientation for all of D.
  Perm w = b;
  for (auto [d, pd] : p.pairs)
    if (conjugate(regular(d), b) != regular(pd)) {
      w = b.inverse();
      break;
    }

  WitnessCertificate cert;
  cert.ambient = PermGroup::symmetric(n);
  cert.witness = w;
  cert.tag = "hall";
  cert.equations.reserve(D.size());
  for (Elem d : D) cert.equations.emplace_back(regular(d), regular(p(d)));
  if (auto bad = cert.first_failure())
    throw InternalError("coset witness fails on element " + std::to_string(D[*bad]));
  return cert;
}

HallWitness hall_witness(const PartialAutomorphism& p, const Caps& caps) {
  PermRepresentation rho = regular_representation(p.ambient, caps);
  WitnessCertificate cert = hall_witness(rho, p);
  return {std::move(rho), std::move(cert)};
}

NEppaClosure n_eppa_closure(const FiniteGroup& A, const std::vector<PartialAutomorphism>& ps, const Caps& caps) {
  NEppaClosure out;
  out.embedding = regular_representation(A, caps);
  std::vector<Perm> gens = out.embedding(A.generating_set());
  for (const auto& p : ps) {
    if (p.ambient.order() != A.order()) throw InputError("partial automorphism of a different group");
    out.automorphisms.push_back(hall_witness(out.embedding, p));
    gens.push_back(out.automorphisms.back().witness);
  }
  out.B = PermGroup(A.order(), gens);
  for (auto& cert : out.automorphisms) {
    cert.ambient = out.B;
    cert.tag = "n-eppa";
  }
  return out;
}

bool CommutingWitnesses::verify() const {
  for (const auto& c : certificates)
    if (!c.verify()) return false;
  for (std::size_t i = 0; i < certificates.size(); ++i)
    for (std::size_t j = i + 1; j < certificates.size(); ++j)
      if (compose(certificates[i].witness, certificates[j].witness) !=
          compose(certificates[j].witness, certificates[i].witness))
        return false;
  return true;
}

CommutingWitnesses commuting_witnesses(const FiniteGroup& A, const std::vector<std::vector<Elem>>& sigmas,
                                       const Caps& caps) {
  const std::size_t n = A.order();
  if (sigmas.empty()) throw InputError("at least one automorphism is required");
  for (const auto& s : sigmas)
    if (!is_element_automorphism(A, s)) throw PreconditionError("a given map is not an automorphism");
  for (const auto& s : sigmas)
    for (const auto& t : sigmas)
      for (Elem x = 0; x < n; ++x)
        if (s[t[x]] != t[s[x]]) throw PreconditionError("the automorphisms do not commute");
  for (Elem x = 0; x < n; ++x)
    if (sigmas[0][x] == x)
      for (const auto& s : sigmas)
        if (s[x] != x) throw PreconditionError("a fixed point of sigma_0 is moved by another automorphism");

  CommutingWitnesses out;
  PermRepresentation rho = regular_representation(A, caps);
  std::size_t N = n;
  std::vector<Perm> a_img;
  for (Elem a = 0; a < n; ++a) a_img.push_back(rho(a));
  std::vector<Perm> gs{hall_witness(rho, validate_partial_automorphism(A, pairs_on_generators(A, sigmas[0]))).witness};
  out.stage_orders.push_back(N);

  for (std::size_t k = 1; k < sigmas.size(); ++k) {
    try {
      std::vector<Perm> gens;
      for (Elem a : A.generating_set()) gens.push_back(a_img[a]);
      gens.insert(gens.end(), gs.begin(), gs.end());
      FiniteGroup D = FiniteGroup::from_permutations(N, gens, caps.finite_group);
      if (D.order() > caps.degree) throw CapExceeded("D_k exceeds the degree cap");
      std::vector<Elem> aidx(n), gidx;
      for (Elem a = 0; a < n; ++a) aidx[a] = *D.index_of(a_img[a]);
      for (const Perm& g : gs) gidx.push_back(*D.index_of(g));
      std::vector<Elem> Bk = D.generate(gidx);

      // A_k = ⟨A^(B_k)⟩ and the extension a^b ↦ sigma(a)^b on it.
      const auto& sigma = sigmas[k];
      std::vector<Elem> ext(D.order(), kNoImage), conjs;
      for (Elem b : Bk)
        for (Elem a = 0; a < n; ++a) {
          Elem x = D.conj(aidx[a], b), v = D.conj(aidx[sigma[a]], b);
          if (ext[x] != kNoImage && ext[x] != v)
            throw PreconditionError("the extension a^b -> sigma(a)^b is not well defined");
          ext[x] = v;
          conjs.push_back(x);
        }
      std::vector<Elem> Ak = D.generate(conjs);
      for (Elem x : Ak)
        if (ext[x] == kNoImage) throw PreconditionError("<A^B_k> is larger than the set A^B_k");
      for (Elem x : Ak)
        for (Elem y : Ak)
          if (ext[D.mul(x, y)] != D.mul(ext[x], ext[y]))
            throw PreconditionError("the extension is not a homomorphism");
      for (Elem x : Ak)
        for (Elem g : gidx)
          if (ext[D.conj(x, g)] != D.conj(ext[x], g))
            throw PreconditionError("the extension does not commute with conjugation by B_k");
      for (Elem x : Ak)
        if (std::binary_search(Bk.begin(), Bk.end(), x) && ext[x] != x)
          throw PreconditionError("the extension moves an element of A_k ∩ B_k");

      std::vector<std::pair<Elem, Elem>> pairs;
      for (Elem g : gidx) pairs.emplace_back(g, g);
      for (Elem x : D.generating_set(Ak)) pairs.emplace_back(x, ext[x]);
      PartialAutomorphism pa = [&] {
        try {
          return validate_partial_automorphism(D, pairs);
        } catch (const RejectedPairing& e) {
          throw PreconditionError(std::string("b·a -> b·sigma(a) does not extend: ") + e.what());
        }
      }();
      HallWitness hw = hall_witness(pa, caps);
      for (Elem a = 0; a < n; ++a) a_img[a] = hw.embedding(aidx[a]);
      for (std::size_t j = 0; j < gs.size(); ++j) gs[j] = hw.embedding(gidx[j]);
      gs.push_back(hw.certificate.witness);
      N = D.order();
      out.stage_orders.push_back(N);
    } catch (const CapExceeded& e) {
      out.complete = false;
      out.stopped = "step " + std::to_string(k) + ": " + e.what();
      break;
    }
  }

  for (std::size_t i = 0; i < gs.size(); ++i) {
    WitnessCertificate cert;
    cert.ambient = PermGroup::symmetric(N);
    cert.witness = gs[i];
    cert.tag = "commuting";
    for (Elem a = 0; a < n; ++a) cert.equations.emplace_back(a_img[a], a_img[sigmas[i][a]]);
    if (cert.first_failure()) throw InternalError("re-embedded witness lost its equations");
    out.certificates.push_back(std::move(cert));
  }
  out.embedding = PermRepresentation(A, N, std::move(a_img));
  return out;
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q) {
  std::uint64_t x = r % q, k = 1;
  while (x != 1) {
    x = x * r % q;
    ++k;
  }
  return k;
}

}  // namespace

OddPrimeStep odd_prime_abelian_builder(const AbelianGroup& A, std::uint64_t p, const Caps& caps) {
  if (p < 3 || !is_prime(p)) throw InputError("p must be an odd prime");
  if (A.order() % p) throw InputError("p does not divide |A|");
  OddPrimeStep out;
  std::vector<std::int64_t> moduli;
  for (std::int64_t m : A.moduli())
    for (std::int64_t q = 2; m > 1; ++q) {
      if (q * q > m) q = m;
      std::int64_t pe = 1;
      while (m % q == 0) m /= q, pe *= q;
      if (pe > 1) moduli.push_back(pe);
    }
  std::sort(moduli.begin(), moduli.end());
  out.primary = AbelianGroup::product(moduli);
  std::int64_t q = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] % static_cast<std::int64_t>(p) == 0 && moduli[i] > q) {
      q = moduli[i];
      out.factor = i;
    }
  const std::uint64_t phi = static_cast<std::uint64_t>(q) / p * (p - 1);
  for (std::int64_t r = 2;; ++r)
    if (std::gcd(r, q) == 1 && multiplicative_order(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(q)) == phi) {
      out.multiplier = r;
      break;
    }

  const AbelianGroup& P = out.primary;
  FiniteGroup F = P.to_finite_group();
  std::vector<Elem> sigma(F.order());
  for (Elem x = 0; x < F.order(); ++x) {
    AbVec v = P.element(x);
    v[out.factor] = v[out.factor] * out.multiplier % q;
    sigma[x] = static_cast<Elem>(P.index(v));
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> complement;
  for (std::size_t i = 0; i < P.rank(); ++i) {
    Elem e = static_cast<Elem>(P.index(P.basis(i)));
    pairs.emplace_back(e, sigma[e]);
    if (i != out.factor) complement.push_back(e);
  }
  HallWitness hw = hall_witness(validate_partial_automorphism(F, pairs), caps);
  out.certificate = std::move(hw.certificate);
  out.certificate.tag = "odd prime step";
  Perm sigma_perm(std::vector<Point>(sigma.begin(), sigma.end()));
  out.sigma_order = sigma_perm.order();

  std::vector<Perm> gens{out.certificate.witness};
  for (Elem e : complement) gens.push_back(hw.embedding(e));
  out.B = PermGroup(F.order(), gens);
  out.B_order = static_cast<std::uint64_t>(out.B.order());
  bool abelian = true;
  for (const Perm& a : gens)
    for (const Perm& b : gens) abelian &= compose(a, b) == compose(b, a);
  const std::uint64_t target = A.order() / p * (p - 1);
  out.checks.add("sigma has order p^(k-1)(p-1)", out.sigma_order == phi,
                 std::to_string(out.sigma_order) + " vs " + std::to_string(phi));
  out.checks.add("witness equations hold", out.certificate.verify());
  out.checks.add("B = <g, A'> is abelian", abelian);
  out.checks.add("(p-1)/p |A| divides |B|", out.B_order % target == 0,
                 std::to_string(out.B_order) + " vs " + std::to_string(target));
  if (out.B_order <= caps.enumeration) {
    auto elements = enumerate_closure(F.order(), gens, caps.enumeration);
    std::vector<std::uint64_t> orders;
    for (const Perm& e : *elements) orders.push_back(e.order());
    out.B_invariants = abelian_invariants_from_orders(orders);
  }
  return out;
}

}  // namespace ultrahom
