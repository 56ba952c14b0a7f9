#pragma once

#include <json.hpp>

#include "ultrahom/abelian.hpp"
#include "ultrahom/finite_group.hpp"

namespace ultrahom {

/// {"name": ..., "order": n, "table": [[...], ...]}. Loading revalidates the
/// table and throws InputError.
nlohmann::json finite_group_to_json(const FiniteGroup& G);
FiniteGroup finite_group_from_json(const nlohmann::json& j);

/// {"invariant_factors": [...]} for groups in normal form, {"moduli": [...]}
/// otherwise.
nlohmann::json abelian_group_to_json(const AbelianGroup& G);
AbelianGroup abelian_group_from_json(const nlohmann::json& j);

}  // namespace ultrahom
