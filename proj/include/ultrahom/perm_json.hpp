#pragma once

#include <json.hpp>

#include "ultrahom/perm_group.hpp"

namespace ultrahom {

/// A permutation is stored as its image array.
void to_json(nlohmann::json& j, const Perm& p);
/// Throws InputError on a non-bijective array.
void from_json(const nlohmann::json& j, Perm& p);

/// {"degree": d, "generators": [[...], ...]}, or {"degree": d,
/// "symmetric": true} for a full symmetric group; the stabilizer chain is
/// recomputed on load.
nlohmann::json group_to_json(const PermGroup& G);
PermGroup group_from_json(const nlohmann::json& j);

}  // namespace ultrahom
