#include "ultrahom/perm_json.hpp"

#include "ultrahom/error.hpp"

namespace ultrahom {

void to_json(nlohmann::json& j, const Perm& p) { j = p.images(); }

void from_json(const nlohmann::json& j, Perm& p) {
  if (!j.is_array()) throw InputError("a permutation must be a JSON array of images");
  std::vector<Point> images;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw InputError("permutation images must be non-negative integers");
    images.push_back(v.get<Point>());
  }
  p = Perm(std::move(images));
}

nlohmann::json group_to_json(const PermGroup& G) {
  if (G.is_full_symmetric()) return {{"degree", G.degree()}, {"symmetric", true}};
  return {{"degree", G.degree()}, {"generators", G.generators()}};
}

PermGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || (!j.contains("generators") && !j.contains("symmetric")))
    throw InputError("a permutation group needs \"degree\" and \"generators\"");
  auto degree = j.at("degree").get<std::size_t>();
  if (j.value("symmetric", false)) return PermGroup::symmetric(degree);
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) gens.push_back(g.get<Perm>());
  return PermGroup(degree, std::move(gens));
}

}  // namespace ultrahom
