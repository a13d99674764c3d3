#include "dasmr/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dasmr {

void CemConfig::validate(const EnvConfig& env) const {
    if (horizon <= 0) {
        throw std::invalid_argument("cem horizon must be > 0");
    }
    if (horizon > env.max_episode_steps) {
        throw std::invalid_argument("cem horizon " + std::to_string(horizon) + " exceeds env.max_episode_steps " +
                                    std::to_string(env.max_episode_steps));
    }
    if (!(elite_fraction > 0.0 && elite_fraction < 1.0)) {
        throw std::invalid_argument("cem elite_fraction must lie in (0, 1)");
    }
    if (static_cast<double>(population) * elite_fraction < 2.0) {
        throw std::invalid_argument("cem population * elite_fraction must be >= 2");
    }
    if (iterations == 0) {
        throw std::invalid_argument("cem iterations must be > 0");
    }
    if (!(init_std > 0.0)) {
        throw std::invalid_argument("cem init_std must be > 0");
    }
    if (knot_interval <= 0) {
        throw std::invalid_argument("cem knot_interval must be > 0");
    }
}

std::size_t CemConfig::elite_count() const {
    return static_cast<std::size_t>(std::floor(static_cast<double>(population) * elite_fraction));
}

namespace {

struct Rollout {
    double score = 0.0;
    double cumulative = 0.0;
    double final_distance = 0.0;
    bool reached = false;
    std::int64_t steps = 0;
};

class SequenceEvaluator {
public:
    SequenceEvaluator(const EnvConfig& env_config, const RobotParams& robot, const Goal& goal,
                      const RewardSpec& objective, const std::optional<SimState>& start, std::int64_t horizon,
                      std::int64_t knot_interval)
        : base_(make_env(env_config, objective), robot),
          goal_(goal),
          start_(start ? *start : rest_state(env_config.reset_robot_pose)),
          horizon_(horizon),
          knot_interval_(knot_interval) {}

    Action action_at(std::span<const double> knots, std::int64_t step) const {
        const auto k = static_cast<std::size_t>(step / knot_interval_);
        return {knots[2 * k], knots[2 * k + 1]};
    }

    Rollout run(std::span<const double> knots) const {
        Environment env = base_;
        env.reset_from(start_, goal_);
        Rollout out;
        out.final_distance = body_frame_displacement(start_.pose, goal_).d;
        for (std::int64_t t = 0; t < horizon_; ++t) {
            const StepResult r = env.step(action_at(knots, t));
            out.cumulative += r.reward;
            out.final_distance = r.info.distance_to_goal;
            out.steps = t + 1;
            if (r.terminated) {
                out.reached = true;
                break;
            }
            if (r.truncated) {
                out.score += r.reward * static_cast<double>(horizon_ - t - 1);
                break;
            }
        }
        out.score += out.cumulative;
        return out;
    }

private:
    static EnvConfig make_env(EnvConfig config, const RewardSpec& objective) {
        config.reward = objective;
        return config;
    }

    Environment base_;
    Goal goal_;
    SimState start_;
    std::int64_t horizon_;
    std::int64_t knot_interval_;
};

}  // namespace

CemResult cem_plan(const EnvConfig& env_config, const RobotParams& robot, const Goal& goal,
                   const RewardSpec& objective, const CemConfig& cem, const std::optional<SimState>& start) {
    cem.validate(env_config);
    objective.validate();
    const SequenceEvaluator evaluator(env_config, robot, goal, objective, start, cem.horizon, cem.knot_interval);

    CemResult result;
    const Pose origin = start ? start->pose : env_config.reset_robot_pose;
    const double initial_distance = body_frame_displacement(origin, goal).d;
    if (initial_distance < env_config.d_th) {
        result.final_distance = initial_distance;
        result.reached = true;
        return result;
    }

    const auto knots = static_cast<std::size_t>((cem.horizon + cem.knot_interval - 1) / cem.knot_interval);
    const std::size_t dim = 2 * knots;
    const std::size_t n_elite = cem.elite_count();

    std::vector<double> mean(dim, 0.0);
    std::vector<double> stddev(dim, cem.init_std);
    std::vector<double> best(dim, 0.0);
    Rollout best_rollout = evaluator.run(best);

    std::mt19937_64 rng(cem.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> samples(cem.population, std::vector<double>(dim));
    std::vector<Rollout> results(cem.population);
    std::vector<std::size_t> order(cem.population);

    for (std::size_t iter = 0; iter < cem.iterations; ++iter) {
        // Draw the whole population before any rollout so the sample stream
        // does not depend on evaluation order.
        for (std::size_t i = 0; i < cem.population; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                samples[i][j] = std::clamp(mean[j] + stddev[j] * normal(rng), -1.0, 1.0);
            }
        }
        // The current mean rides along as the last candidate.
        samples.back() = mean;
        for (std::size_t i = 0; i < cem.population; ++i) {
            results[i] = evaluator.run(samples[i]);
        }

        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return results[a].score > results[b].score; });
        if (results[order.front()].score > best_rollout.score) {
            best_rollout = results[order.front()];
            best = samples[order.front()];
        }
        result.best_per_iteration.push_back(best_rollout.score);

        for (std::size_t j = 0; j < dim; ++j) {
            double m = 0.0;
            for (std::size_t e = 0; e < n_elite; ++e) {
                m += samples[order[e]][j];
            }
            m /= static_cast<double>(n_elite);
            double var = 0.0;
            for (std::size_t e = 0; e < n_elite; ++e) {
                const double diff = samples[order[e]][j] - m;
                var += diff * diff;
            }
            mean[j] = m;
            stddev[j] = std::sqrt(var / static_cast<double>(n_elite));
        }
    }

    result.actions.reserve(static_cast<std::size_t>(best_rollout.steps));
    for (std::int64_t t = 0; t < best_rollout.steps; ++t) {
        result.actions.push_back(evaluator.action_at(best, t));
    }
    result.final_distance = best_rollout.final_distance;
    result.cumulative_reward = best_rollout.cumulative;
    result.reached = best_rollout.reached;
    return result;
}

std::vector<Action> scripted_three_point(const RobotParams& params, double dt, const ThreePointTurn& turn) {
    params.validate();
    if (!(dt > 0.0)) {
        throw std::invalid_argument("dt must be > 0");
    }
    auto steps = [dt](double seconds) {
        if (!(seconds >= 0.0)) {
            throw std::invalid_argument("three-point segment durations must be >= 0");
        }
        return static_cast<std::size_t>(std::llround(seconds / dt));
    };
    const std::size_t first = steps(turn.forward_time);
    const std::size_t second = steps(turn.reverse_time);
    const std::size_t third = steps(turn.final_time);
    const Action forward = Action{turn.throttle, turn.steer}.clamped();
    const Action reverse = Action{-turn.throttle, -turn.steer}.clamped();
    std::vector<Action> actions;
    actions.reserve(first + second + third);
    actions.insert(actions.end(), first, forward);
    actions.insert(actions.end(), second, reverse);
    actions.insert(actions.end(), third, forward);
    return actions;
}

std::vector<double> reward_ordering_probe(std::span<const Pose> trajectory, const Goal& goal,
                                          std::span<const RewardSpec> specs) {
    std::vector<double> totals(specs.size(), 0.0);
    for (const Pose& pose : trajectory) {
        const Displacement disp = body_frame_displacement(pose, goal);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            totals[i] += evaluate_reward(specs[i], disp);
        }
    }
    return totals;
}

}  // namespace dasmr
