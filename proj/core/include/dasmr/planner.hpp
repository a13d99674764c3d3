#pragma once

#include "dasmr/environment.hpp"
#include "dasmr/rewards.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dasmr {

/// Cross-entropy method over open-loop action sequences.
struct CemConfig {
    std::int64_t horizon = 300;
    std::size_t population = 128;
    double elite_fraction = 0.1;
    std::size_t iterations = 40;
    double init_std = 0.5;
    std::uint64_t seed = 0;
    /// Actions are held constant over this many steps between knots.
    std::int64_t knot_interval = 10;

    /// Throws std::invalid_argument, including for horizon > max_episode_steps.
    void validate(const EnvConfig& env) const;
    std::size_t elite_count() const;
};

struct CemResult {
    /// Actions actually executed (stops at termination).
    std::vector<Action> actions;
    double final_distance = 0.0;
    /// Sum of the objective over the executed steps.
    double cumulative_reward = 0.0;
    bool reached = false;
    /// Best planning score seen so far, after each iteration.
    std::vector<double> best_per_iteration;
};

/// Plans toward `goal` from the configured reset pose (or `start`), scoring
/// candidates by cumulative `objective`. A rollout that reaches the goal
/// scores 0 for its remaining horizon; one that leaves the workspace keeps
/// its last reward for the remaining horizon. A goal already within d_th
/// yields an empty, reached plan. Deterministic for a given seed.
CemResult cem_plan(const EnvConfig& env_config, const RobotParams& robot, const Goal& goal,
                   const RewardSpec& objective, const CemConfig& cem,
                   const std::optional<SimState>& start = std::nullopt);

/// Segment durations (s) and normalized steering of a three-point turn:
/// forward arc, reverse arc with opposite steering, forward arc.
struct ThreePointTurn {
    double forward_time = 1.5;
    double reverse_time = 1.5;
    double final_time = 1.5;
    double steer = 1.0;
    double throttle = 1.0;
};

std::vector<Action> scripted_three_point(const RobotParams& params, double dt, const ThreePointTurn& turn = {});

/// Cumulative value of each reward along a pose sequence toward a goal.
std::vector<double> reward_ordering_probe(std::span<const Pose> trajectory, const Goal& goal,
                                          std::span<const RewardSpec> specs);

}  // namespace dasmr
