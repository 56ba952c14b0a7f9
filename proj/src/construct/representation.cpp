#include "ultrahom/representation.hpp"

#include <unordered_map>

#include "ultrahom/error.hpp"

namespace ultrahom {

PermRepresentation::PermRepresentation(FiniteGroup source, std::size_t degree, std::vector<Perm> images)
    : source_(std::move(source)), degree_(degree) {
  if (images.size() != source_.order()) throw InputError("one image per element is required");
  for (const Perm& p : images)
    if (p.degree() != degree) throw InputError("image has the wrong degree");
  images_ = std::make_shared<const std::vector<Perm>>(std::move(images));
}

Perm PermRepresentation::operator()(Elem g) const {
  if (g >= source_.order()) throw InputError("element outside the source group");
  if (!regular_) return (*images_)[g];
  std::vector<Point> img(degree_);
  for (Elem a = 0; a < degree_; ++a) img[a] = source_.mul(g, a);
  return Perm::unchecked(std::move(img));
}

std::vector<Perm> PermRepresentation::operator()(const std::vector<Elem>& gs) const {
  std::vector<Perm> out;
  out.reserve(gs.size());
  for (Elem g : gs) out.push_back((*this)(g));
  return out;
}

PermGroup PermRepresentation::image_group() const {
  return PermGroup(degree_, (*this)(source_.generating_set()));
}

bool PermRepresentation::is_homomorphism() const {
  if (regular_) return true;  // associativity of the table
  for (Elem g : source_.generating_set()) {
    Perm pg = (*this)(g);
    for (Elem x = 0; x < source_.order(); ++x)
      if (compose(pg, (*this)(x)) != (*this)(source_.mul(g, x))) return false;
  }
  return (*this)(0).is_identity();
}

bool PermRepresentation::is_injective() const {
  if (regular_) return true;
  std::unordered_map<Perm, Elem, PermHash> seen;
  for (Elem x = 0; x < source_.order(); ++x)
    if (!seen.emplace((*this)(x), x).second) return false;
  return true;
}

std::optional<Elem> PermRepresentation::preimage(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  if (regular_) {
    // rho(g) sends the identity to g.
    Elem g = p(0);
    if ((*this)(g) == p) return g;
    return std::nullopt;
  }
  for (Elem x = 0; x < source_.order(); ++x)
    if ((*images_)[x] == p) return x;
  return std::nullopt;
}

PermRepresentation regular_representation(const FiniteGroup& G, const Caps& caps) {
  if (G.order() > caps.degree)
    throw CapExceeded("regular representation of a group of order " + std::to_string(G.order()) +
                      " exceeds the degree cap " + std::to_string(caps.degree));
  PermRepresentation r;
  r.source_ = G;
  r.degree_ = G.order();
  r.regular_ = true;
  return r;
}

std::optional<std::size_t> WitnessCertificate::first_failure() const {
  for (std::size_t i = 0; i < equations.size(); ++i)
    if (conjugate(equations[i].first, witness) != equations[i].second) return i;
  return std::nullopt;
}

bool WitnessCertificate::verify() const {
  return witness.degree() == ambient.degree() && !first_failure() && ambient.contains(witness);
}

}  // namespace ultrahom
