#pragma once

#include <string>

#include "json.hpp"

#include "sring/families.hpp"
#include "sring/oracle.hpp"
#include "sring/section.hpp"
#include "sring/similarity.hpp"
#include "sring/sring.hpp"

namespace sring {

using Json = nlohmann::ordered_json;

Json to_json(const SRing& a);
// Accepts {"n": int, "classes": [[int, ...], ...]} and validates it.
// Throws InvalidInput on malformed JSON and the validation errors otherwise.
SRing sring_from_json(const Json& j);
SRing parse_sring(const std::string& text);

Json to_json(const Section& s);
Json to_json(const Similarity& phi);
Json to_json(const Multiplier& mu);
Json to_json(const OuterMultiplier& fs);
Json to_json(const Isomorphism& f);

}  // namespace sring
