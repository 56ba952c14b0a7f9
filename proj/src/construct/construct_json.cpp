#include "ultrahom/construct_json.hpp"

#include "ultrahom/error.hpp"
#include "ultrahom/group_json.hpp"
#include "ultrahom/perm_json.hpp"

namespace ultrahom {

nlohmann::json certificate_to_json(const WitnessCertificate& c) {
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& [a, pa] : c.equations) eqs.push_back({a, pa});
  return {{"ambient", group_to_json(c.ambient)}, {"witness", c.witness}, {"equations", eqs}, {"tag", c.tag}};
}

WitnessCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    WitnessCertificate c;
    c.ambient = group_from_json(j.at("ambient"));
    c.witness = j.at("witness").get<Perm>();
    for (const auto& e : j.at("equations")) c.equations.emplace_back(e.at(0).get<Perm>(), e.at(1).get<Perm>());
    c.tag = j.value("tag", std::string{});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

nlohmann::json representation_to_json(const PermRepresentation& r) {
  std::vector<Perm> images;
  for (Elem x = 0; x < r.source().order(); ++x) images.push_back(r(x));
  return {{"source", finite_group_to_json(r.source())}, {"degree", r.degree()}, {"images", images}};
}

PermRepresentation representation_from_json(const nlohmann::json& j) {
  try {
    return PermRepresentation(finite_group_from_json(j.at("source")), j.at("degree").get<std::size_t>(),
                              j.at("images").get<std::vector<Perm>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representation: ") + e.what());
  }
}

nlohmann::json amalgam_to_json(const AmalgamResult& r) {
  nlohmann::json out{{"complete", r.complete}, {"stages", r.stages}};
  if (!r.complete) {
    out["stopped"] = r.stopped;
    return out;
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(certificate_to_json(w));
  out["degree"] = r.D.degree();
  out["D"] = group_to_json(r.D);
  out["embed_B"] = representation_to_json(r.embed_B);
  out["embed_C"] = representation_to_json(r.embed_C);
  out["base_image"] = r.base_image;
  out["witnesses"] = witnesses;
  out["intersection_checked"] = r.intersection_checked;
  out["intersection_exact"] = r.intersection_exact;
  return out;
}

}  // namespace ultrahom
