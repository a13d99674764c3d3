#pragma once

#include "dasmr/environment.hpp"
#include "dasmr/metrics.hpp"
#include "dasmr/policy.hpp"
#include "dasmr/simulator.hpp"

#include <cstdint>
#include <vector>

namespace dasmr {

/// One logged environment step; `state` is the state after the step.
struct StepRow {
    std::int64_t step = 0;
    double time = 0.0;
    SimState state;
    Action action;
    double reward = 0.0;
    bool terminated = false;
    bool truncated = false;

    bool operator==(const StepRow&) const = default;
};

struct Episode {
    Goal goal;
    Pose start_pose;
    std::vector<StepRow> rows;
};

/// Runs `policy` in an environment that has just been reset, until the
/// episode terminates or is truncated.
Episode run_episode(Environment& env, Policy& policy);

/// Summarizes an episode against a success threshold. Success is the first
/// step whose goal distance is strictly below d_th; path length counts up to
/// that step. Without success the outcome follows the last logged pose.
EpisodeRecord episode_record(const Episode& episode, double d_th, double workspace_half_extent);

/// Center positions from start through every logged step.
std::vector<Pose> episode_poses(const Episode& episode);

}  // namespace dasmr
