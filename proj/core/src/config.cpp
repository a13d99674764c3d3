#include "dasmr/config.hpp"

#include "dasmr/errors.hpp"
#include "json_codec.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dasmr {
namespace detail {

namespace {

using nlohmann::json;

void reject_unknown(const json& object, const std::string& where, const std::set<std::string>& known) {
    if (!object.is_object()) {
        throw ConfigError("'" + where + "' must be an object");
    }
    for (const auto& [key, _] : object.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown field '" + (where.empty() ? key : where + "." + key) + "'");
        }
    }
}

template <typename T>
void read_field(const json& object, const std::string& where, const char* key, T& out) {
    const auto it = object.find(key);
    if (it == object.end()) {
        return;
    }
    const std::string name = where + "." + key;
    if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) {
            throw ConfigError("field '" + name + "' must be a boolean");
        }
    } else if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer()) {
            throw ConfigError("field '" + name + "' must be an integer");
        }
        if constexpr (std::is_unsigned_v<T>) {
            if (it->is_number_unsigned() == false && it->template get<std::int64_t>() < 0) {
                throw ConfigError("field '" + name + "' must be non-negative");
            }
        }
    } else {
        if (!it->is_number()) {
            throw ConfigError("field '" + name + "' must be a number");
        }
    }
    out = it->template get<T>();
}

}  // namespace

json to_json_value(const Pose& pose) { return {{"x", pose.x}, {"y", pose.y}, {"theta", pose.theta}}; }

Pose pose_from_json_value(const json& value, const std::string& where) {
    reject_unknown(value, where, {"x", "y", "theta"});
    Pose pose;
    read_field(value, where, "x", pose.x);
    read_field(value, where, "y", pose.y);
    read_field(value, where, "theta", pose.theta);
    return pose;
}

json to_json_value(const Config& config) {
    const RobotParams& r = config.robot;
    const EnvConfig& e = config.env;
    return {
        {"robot",
         {{"wheelbase_L", r.wheelbase_L},
          {"track_W", r.track_W},
          {"wheel_radius", r.wheel_radius},
          {"max_wheel_spin", r.max_wheel_spin},
          {"max_steer_angle", r.max_steer_angle},
          {"max_steer_rate", r.max_steer_rate},
          {"max_wheel_spin_accel", r.max_wheel_spin_accel}}},
        {"env",
         {{"workspace_half_extent", e.workspace_half_extent},
          {"goal_half_extent", e.goal_half_extent},
          {"d_th", e.d_th},
          {"max_episode_steps", e.max_episode_steps},
          {"dt", e.dt},
          {"seed", e.seed},
          {"continuous_goals", e.continuous_goals},
          {"reset_robot_pose", to_json_value(e.reset_robot_pose)}}},
        {"reward", {{"kind", std::string(to_string(e.reward.kind))}, {"c", e.reward.c}, {"d_th", e.reward.d_th}}},
    };
}

Config config_from_json_value(const json& root) {
    reject_unknown(root, "", {"robot", "env", "reward"});
    Config config;
    if (const auto it = root.find("robot"); it != root.end()) {
        reject_unknown(*it, "robot",
                       {"wheelbase_L", "track_W", "wheel_radius", "max_wheel_spin", "max_steer_angle",
                        "max_steer_rate", "max_wheel_spin_accel"});
        RobotParams& r = config.robot;
        read_field(*it, "robot", "wheelbase_L", r.wheelbase_L);
        read_field(*it, "robot", "track_W", r.track_W);
        read_field(*it, "robot", "wheel_radius", r.wheel_radius);
        read_field(*it, "robot", "max_wheel_spin", r.max_wheel_spin);
        read_field(*it, "robot", "max_steer_angle", r.max_steer_angle);
        read_field(*it, "robot", "max_steer_rate", r.max_steer_rate);
        read_field(*it, "robot", "max_wheel_spin_accel", r.max_wheel_spin_accel);
    }
    if (const auto it = root.find("env"); it != root.end()) {
        reject_unknown(*it, "env",
                       {"workspace_half_extent", "goal_half_extent", "d_th", "max_episode_steps", "dt", "seed",
                        "continuous_goals", "reset_robot_pose"});
        EnvConfig& e = config.env;
        read_field(*it, "env", "workspace_half_extent", e.workspace_half_extent);
        read_field(*it, "env", "goal_half_extent", e.goal_half_extent);
        read_field(*it, "env", "d_th", e.d_th);
        read_field(*it, "env", "max_episode_steps", e.max_episode_steps);
        read_field(*it, "env", "dt", e.dt);
        read_field(*it, "env", "seed", e.seed);
        read_field(*it, "env", "continuous_goals", e.continuous_goals);
        if (const auto pose = it->find("reset_robot_pose"); pose != it->end()) {
            e.reset_robot_pose = pose_from_json_value(*pose, "env.reset_robot_pose");
        }
    }
    config.env.reward.d_th = config.env.d_th;
    if (const auto it = root.find("reward"); it != root.end()) {
        reject_unknown(*it, "reward", {"kind", "c", "d_th"});
        RewardSpec& spec = config.env.reward;
        if (const auto kind = it->find("kind"); kind != it->end()) {
            if (!kind->is_string()) {
                throw ConfigError("field 'reward.kind' must be a string");
            }
            spec.kind = parse_reward_kind(kind->get<std::string>());
        }
        read_field(*it, "reward", "c", spec.c);
        read_field(*it, "reward", "d_th", spec.d_th);
    }
    config.robot.validate();
    config.env.validate();
    return config;
}

}  // namespace detail

Config parse_config(std::string_view json_text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ConfigError(std::string("config is not valid JSON: ") + err.what());
    }
    try {
        return detail::config_from_json_value(root);
    } catch (const nlohmann::json::exception& err) {
        throw ConfigError(std::string("config field out of range: ") + err.what());
    }
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string dump_config(const Config& config) { return detail::to_json_value(config).dump(2); }

}  // namespace dasmr
