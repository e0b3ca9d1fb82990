#pragma once

// Internal JSON helpers shared by the certificate writers.

#include "sdf_forge/construct.hpp"

#include <json.hpp>

namespace sdf::detail {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const ConstructionCertificate& cert);
ConstructionCertificate certificate_from_json(const Json& j);

} // namespace sdf::detail
