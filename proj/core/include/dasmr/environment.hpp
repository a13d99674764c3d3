#pragma once

#include "dasmr/kinematics.hpp"
#include "dasmr/rewards.hpp"
#include "dasmr/simulator.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace dasmr {

struct EnvConfig {
    double workspace_half_extent = 4.0;
    double goal_half_extent = 2.0;
    double d_th = 0.15;
    std::int64_t max_episode_steps = 800;
    double dt = kControlPeriod;
    RewardSpec reward;
    std::uint64_t seed = 9527;
    Pose reset_robot_pose;
    /// Keep the robot pose across resets and only resample the goal.
    bool continuous_goals = false;

    void validate() const;
    bool operator==(const EnvConfig&) const = default;
};

struct Goal {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Goal&) const = default;
};

/// The 14-dimensional agent state, everything in the reset frame.
struct Observation {
    static constexpr std::size_t kSize = 14;
    static const std::array<std::string_view, kSize> kNames;

    double x_c = 0.0;
    double y_c = 0.0;
    double x_d = 0.0;
    double y_d = 0.0;
    double theta_c = 0.0;
    double omega_l = 0.0;
    double omega_r = 0.0;
    double phi_l = 0.0;
    double phi_r = 0.0;
    double phi_dot_l = 0.0;
    double phi_dot_r = 0.0;
    double v_x = 0.0;
    double v_y = 0.0;
    double theta_dot = 0.0;

    std::array<double, kSize> to_array() const;
    bool operator==(const Observation&) const = default;
};

/// Normalized (spin, steering) command, each component in [-1, 1].
struct Action {
    double a_omega = 0.0;
    double a_phi = 0.0;

    /// Clamps both components into [-1, 1]. Throws std::invalid_argument on NaN.
    Action clamped() const;
    bool operator==(const Action&) const = default;
};

struct Box {
    std::vector<double> low;
    std::vector<double> high;
};

struct StepInfo {
    double distance_to_goal = 0.0;
    std::int64_t step_index = 0;
    bool out_of_bounds = false;
};

struct StepResult {
    Observation observation;
    double reward = 0.0;
    /// Goal reached: distance strictly below d_th.
    bool terminated = false;
    /// Step limit hit or center left the workspace (never set with terminated).
    bool truncated = false;
    StepInfo info;
};

struct ResetResult {
    Observation observation;
    Goal goal;
};

/// Goal displacement rotated into the body frame of `pose`.
Displacement body_frame_displacement(const Pose& pose, const Goal& goal);

/// Goal-conditioned episodic environment. Single-threaded; copyable, and a
/// copy continues independently from the same state.
class Environment {
public:
    explicit Environment(EnvConfig config = {}, RobotParams robot = {});

    /// Starts an episode with a freshly sampled goal. A seed reseeds the
    /// goal generator first.
    ResetResult reset(std::optional<std::uint64_t> seed = std::nullopt);
    /// Starts an episode toward a given goal without touching the generator.
    ResetResult reset_to_goal(const Goal& goal);
    /// Starts an episode from an arbitrary simulator state.
    ResetResult reset_from(const SimState& state, const Goal& goal);

    /// Throws UsageError before reset or after the episode has ended.
    StepResult step(const Action& action);

    static Box action_space();
    Box observation_space() const;

    Observation observe() const;
    const SimState& state() const { return state_; }
    const Goal& goal() const { return goal_; }
    const EnvConfig& config() const { return config_; }
    const RobotParams& robot() const { return robot_; }
    bool episode_done() const { return done_; }

private:
    Goal sample_goal();

    EnvConfig config_;
    RobotParams robot_;
    std::mt19937_64 rng_;
    SimState state_;
    Goal goal_;
    bool started_ = false;
    bool done_ = false;
};

}  // namespace dasmr
