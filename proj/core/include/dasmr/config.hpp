#pragma once

#include "dasmr/environment.hpp"
#include "dasmr/kinematics.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace dasmr {

/// Everything needed to build an environment.
///
/// The file format is a JSON object with optional sections:
///
///     {
///       "robot":  {"wheelbase_L": 0.3, "track_W": 0.55, "wheel_radius": 0.13,
///                  "max_wheel_spin": 7.7, "max_steer_angle": 0.436,
///                  "max_steer_rate": 1.0, "max_wheel_spin_accel": 5.0},
///       "env":    {"workspace_half_extent": 4.0, "goal_half_extent": 2.0,
///                  "d_th": 0.15, "max_episode_steps": 800, "dt": 0.025,
///                  "seed": 9527, "continuous_goals": false,
///                  "reset_robot_pose": {"x": 0, "y": 0, "theta": 0}},
///       "reward": {"kind": "hs", "c": 2.0, "d_th": 0.15}
///     }
///
/// Missing fields keep their defaults; reward.d_th defaults to env.d_th.
/// Unknown fields and type mismatches raise ConfigError naming the field.
struct Config {
    RobotParams robot;
    EnvConfig env;

    bool operator==(const Config&) const = default;
};

Config parse_config(std::string_view json_text);
Config load_config(const std::filesystem::path& path);
std::string dump_config(const Config& config);

}  // namespace dasmr
