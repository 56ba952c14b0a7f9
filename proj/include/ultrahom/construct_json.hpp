#pragma once

#include <json.hpp>

#include "ultrahom/amalgam.hpp"
#include "ultrahom/representation.hpp"

namespace ultrahom {

/// {"ambient": group, "witness": [...], "equations": [[a, pa], ...], "tag": ...}
/// with permutations as image arrays.
nlohmann::json certificate_to_json(const WitnessCertificate& c);
/// Throws InputError on malformed input; does not re-verify.
WitnessCertificate certificate_from_json(const nlohmann::json& j);

/// {"source": group table, "degree": d, "images": [[...], ...]}.
nlohmann::json representation_to_json(const PermRepresentation& r);
PermRepresentation representation_from_json(const nlohmann::json& j);

nlohmann::json amalgam_to_json(const AmalgamResult& r);

}  // namespace ultrahom
