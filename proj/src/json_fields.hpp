#pragma once

#include "json.hpp"
#include "mega/ga.hpp"

namespace mega::detail {

nlohmann::json to_json(const GaConfig& cfg);
GaConfig ga_from_json(const nlohmann::json& j, GaConfig base);

}  // namespace mega::detail
