#include "ultrahom/group_json.hpp"

#include "ultrahom/error.hpp"

namespace ultrahom {

nlohmann::json finite_group_to_json(const FiniteGroup& G) {
  return {{"name", G.name()}, {"order", G.order()}, {"table", G.table()}};
}

FiniteGroup finite_group_from_json(const nlohmann::json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw InputError("group order does not match the table size");
    return FiniteGroup::from_table(table, j.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group: ") + e.what());
  }
}

nlohmann::json abelian_group_to_json(const AbelianGroup& G) {
  if (G.is_normal_form()) return {{"invariant_factors", G.moduli()}};
  return {{"moduli", G.moduli()}};
}

AbelianGroup abelian_group_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("invariant_factors"))
      return AbelianGroup::from_invariant_factors(j.at("invariant_factors").get<std::vector<std::int64_t>>());
    auto moduli = j.at("moduli").get<std::vector<std::int64_t>>();
    for (auto m : moduli)
      if (m < 1) throw InputError("cyclic factor orders must be positive");
    return AbelianGroup::product(moduli);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed abelian group: ") + e.what());
  }
}

}  // namespace ultrahom
