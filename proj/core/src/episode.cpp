#include "dasmr/episode.hpp"

#include "dasmr/errors.hpp"

#include <cmath>

namespace dasmr {

Episode run_episode(Environment& env, Policy& policy) {
    if (env.episode_done()) {
        throw UsageError("run_episode needs a freshly reset environment");
    }
    Episode episode{env.goal(), env.state().pose, {}};
    Observation obs = env.observe();
    policy.begin_episode(obs);
    while (true) {
        const Action action = policy.act(obs).clamped();
        const StepResult result = env.step(action);
        StepRow row;
        row.step = result.info.step_index;
        row.time = static_cast<double>(row.step) * env.config().dt;
        row.state = env.state();
        row.action = action;
        row.reward = result.reward;
        row.terminated = result.terminated;
        row.truncated = result.truncated;
        episode.rows.push_back(row);
        obs = result.observation;
        if (result.terminated || result.truncated) {
            break;
        }
    }
    return episode;
}

EpisodeRecord episode_record(const Episode& episode, double d_th, double workspace_half_extent) {
    EpisodeRecord record;
    record.goal = episode.goal;
    record.start_pose = episode.start_pose;
    auto distance = [&](const Pose& p) { return std::hypot(episode.goal.x - p.x, episode.goal.y - p.y); };

    Pose previous = episode.start_pose;
    double path = 0.0;
    for (const StepRow& row : episode.rows) {
        const Pose& p = row.state.pose;
        path += std::hypot(p.x - previous.x, p.y - previous.y);
        previous = p;
        const double d = distance(p);
        if (d < d_th) {
            record.outcome = Outcome::success;
            record.final_distance = d;
            record.path_length = path;
            record.steps = row.step;
            return record;
        }
    }
    const Pose& last = episode.rows.empty() ? episode.start_pose : episode.rows.back().state.pose;
    const bool outside = std::abs(last.x) > workspace_half_extent || std::abs(last.y) > workspace_half_extent;
    record.outcome = outside ? Outcome::truncated_bounds : Outcome::truncated_time;
    record.final_distance = distance(last);
    record.path_length = path;
    record.steps = episode.rows.empty() ? 0 : episode.rows.back().step;
    return record;
}

std::vector<Pose> episode_poses(const Episode& episode) {
    std::vector<Pose> poses;
    poses.reserve(episode.rows.size() + 1);
    poses.push_back(episode.start_pose);
    for (const StepRow& row : episode.rows) {
        poses.push_back(row.state.pose);
    }
    return poses;
}

}  // namespace dasmr
