#include "sring/json_io.hpp"

#include "sring/error.hpp"

namespace sring {

Json to_json(const SRing& a) {
  Json j;
  j["n"] = a.order();
  j["classes"] = a.class_lists();
  return j;
}

SRing sring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("classes")) {
    throw Error(ErrorCode::InvalidInput, "expected an object with \"n\" and \"classes\"");
  }
  const Json& n = j["n"];
  const Json& classes = j["classes"];
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 100000) {
    throw Error(ErrorCode::InvalidInput, "\"n\" must be a positive integer");
  }
  if (!classes.is_array()) throw Error(ErrorCode::InvalidInput, "\"classes\" must be an array");
  const int order = n.get<int>();
  std::vector<std::vector<int>> lists;
  for (const auto& c : classes) {
    if (!c.is_array()) throw Error(ErrorCode::InvalidInput, "every class must be an array of residues");
    std::vector<int> xs;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw Error(ErrorCode::InvalidInput, "residues must be integers");
      const long long v = x.get<long long>();
      if (v < 0 || v >= order) {
        throw Error(ErrorCode::InvalidInput, "residue " + std::to_string(v) + " outside 0.." + std::to_string(order - 1));
      }
      xs.push_back(static_cast<int>(v));
    }
    lists.push_back(std::move(xs));
  }
  return SRing::validate(order, lists);
}

SRing parse_sring(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::InvalidInput, "input is not valid JSON");
  return sring_from_json(j);
}

Json to_json(const Section& s) { return Json{{"l", s.l}, {"u", s.u}}; }

Json to_json(const Similarity& phi) { return Json{{"map", phi.map}}; }

Json to_json(const Multiplier& mu) {
  Json out = Json::array();
  for (const auto& e : mu.entries) out.push_back(Json{{"l", e.section.l}, {"u", e.section.u}, {"k", e.k}});
  return out;
}

Json to_json(const OuterMultiplier& fs) {
  Json out = Json::array();
  for (const auto& e : fs.entries) {
    out.push_back(Json{{"l", e.section.l}, {"u", e.section.u}, {"k", e.rep}, {"stabilizer", e.stabilizer}});
  }
  return out;
}

Json to_json(const Isomorphism& f) { return Json{{"table", f.table}}; }

}  // namespace sring
