#pragma once

#include "dasmr/config.hpp"
#include "dasmr/environment.hpp"

#include <json.hpp>

namespace dasmr::detail {

nlohmann::json to_json_value(const Config& config);
Config config_from_json_value(const nlohmann::json& root);

nlohmann::json to_json_value(const Pose& pose);
Pose pose_from_json_value(const nlohmann::json& value, const std::string& where);

}  // namespace dasmr::detail
