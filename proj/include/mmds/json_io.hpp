#pragma once

#include "mmds/system.hpp"

#include <json.hpp>

namespace mmds {

nlohmann::json system_to_json(const System& sys);
System system_from_json(const nlohmann::json& j);

} // namespace mmds
