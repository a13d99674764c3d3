#include "dasmr/environment.hpp"

#include "dasmr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dasmr {

const std::array<std::string_view, Observation::kSize> Observation::kNames = {
    "x_c", "y_c", "x_d", "y_d", "theta_c", "omega_l", "omega_r",
    "phi_l", "phi_r", "phi_dot_l", "phi_dot_r", "v_x", "v_y", "theta_dot"};

std::array<double, Observation::kSize> Observation::to_array() const {
    return {x_c, y_c, x_d, y_d, theta_c, omega_l, omega_r, phi_l, phi_r, phi_dot_l, phi_dot_r, v_x, v_y, theta_dot};
}

Action Action::clamped() const {
    if (std::isnan(a_omega) || std::isnan(a_phi)) {
        throw std::invalid_argument("action contains NaN");
    }
    return {std::clamp(a_omega, -1.0, 1.0), std::clamp(a_phi, -1.0, 1.0)};
}

void EnvConfig::validate() const {
    auto positive = [](double value, const char* name) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw ConfigError(std::string("env.") + name + " must be finite and > 0");
        }
    };
    positive(workspace_half_extent, "workspace_half_extent");
    positive(goal_half_extent, "goal_half_extent");
    positive(d_th, "d_th");
    positive(dt, "dt");
    if (goal_half_extent > workspace_half_extent) {
        throw ConfigError("env.goal_half_extent must not exceed env.workspace_half_extent");
    }
    if (max_episode_steps <= 0) {
        throw ConfigError("env.max_episode_steps must be > 0");
    }
    reward.validate();
}

Displacement body_frame_displacement(const Pose& pose, const Goal& goal) {
    const double ex = goal.x - pose.x;
    const double ey = goal.y - pose.y;
    const double c = std::cos(pose.theta);
    const double s = std::sin(pose.theta);
    return Displacement::of(c * ex + s * ey, -s * ex + c * ey);
}

Environment::Environment(EnvConfig config, RobotParams robot)
    : config_(std::move(config)), robot_(robot), rng_(config_.seed) {
    config_.validate();
    robot_.validate();
    state_ = rest_state(config_.reset_robot_pose);
}

Goal Environment::sample_goal() {
    std::uniform_real_distribution<double> dist(-config_.goal_half_extent, config_.goal_half_extent);
    const double x = dist(rng_);
    const double y = dist(rng_);
    return {x, y};
}

ResetResult Environment::reset(std::optional<std::uint64_t> seed) {
    if (seed) {
        rng_.seed(*seed);
    }
    return reset_to_goal(sample_goal());
}

ResetResult Environment::reset_to_goal(const Goal& goal) {
    if (config_.continuous_goals && started_) {
        SimState carried = rest_state(state_.pose);
        return reset_from(carried, goal);
    }
    return reset_from(rest_state(config_.reset_robot_pose), goal);
}

ResetResult Environment::reset_from(const SimState& state, const Goal& goal) {
    state_ = state;
    state_.step_index = 0;
    goal_ = goal;
    started_ = true;
    done_ = false;
    return {observe(), goal_};
}

Observation Environment::observe() const {
    Observation obs;
    obs.x_c = state_.pose.x;
    obs.y_c = state_.pose.y;
    obs.x_d = goal_.x;
    obs.y_d = goal_.y;
    obs.theta_c = state_.pose.theta;
    obs.omega_l = state_.wheels.omega_l;
    obs.omega_r = state_.wheels.omega_r;
    obs.phi_l = state_.wheels.phi_l;
    obs.phi_r = state_.wheels.phi_r;
    obs.phi_dot_l = state_.phi_dot_l;
    obs.phi_dot_r = state_.phi_dot_r;
    obs.v_x = state_.v_x;
    obs.v_y = state_.v_y;
    obs.theta_dot = state_.theta_dot;
    return obs;
}

StepResult Environment::step(const Action& action) {
    if (!started_) {
        throw UsageError("step() called before reset()");
    }
    if (done_) {
        throw UsageError("step() called after the episode ended; call reset()");
    }
    const Action a = action.clamped();
    const VirtualBicycleCommand target{a.a_omega * robot_.max_wheel_spin, a.a_phi * robot_.max_steer_angle};
    state_ = simulate_step(state_, target, robot_, config_.dt);

    const Displacement disp = body_frame_displacement(state_.pose, goal_);
    StepResult result;
    result.observation = observe();
    result.reward = evaluate_reward(config_.reward, disp);
    result.info.distance_to_goal = disp.d;
    result.info.step_index = state_.step_index;
    result.info.out_of_bounds = std::abs(state_.pose.x) > config_.workspace_half_extent ||
                                std::abs(state_.pose.y) > config_.workspace_half_extent;
    result.terminated = disp.d < config_.d_th;
    if (!result.terminated) {
        result.truncated = result.info.out_of_bounds || state_.step_index >= config_.max_episode_steps;
    }
    done_ = result.terminated || result.truncated;
    return result;
}

Box Environment::action_space() { return {{-1.0, -1.0}, {1.0, 1.0}}; }

Box Environment::observation_space() const {
    const double ws = config_.workspace_half_extent;
    const double gs = config_.goal_half_extent;
    const double spin = robot_.max_wheel_spin * inner_outer_spin(1.0, inner_outer_steering(robot_.max_steer_angle, robot_).inner, robot_).outer;
    const double phi = inner_outer_steering(robot_.max_steer_angle, robot_).inner;
    // d(phi_i)/d(phi_c) grows with phi_c, so the bound sits at full lock.
    const double L = robot_.wheelbase_L;
    const double m = robot_.max_steer_angle;
    const double offset = L / std::tan(m) - 0.5 * robot_.track_W;
    const double gain = (L * L / (std::sin(m) * std::sin(m))) / (offset * offset + L * L);
    const double phi_rate = robot_.max_steer_rate * gain;
    const double speed = robot_.max_wheel_spin * robot_.wheel_radius;
    const double yaw_rate = speed * std::sin(m) / L;
    const double pi = std::numbers::pi;
    std::vector<double> high = {ws, ws, gs, gs, pi, spin, spin, phi, phi, phi_rate, phi_rate, speed, speed, yaw_rate};
    std::vector<double> low(high.size());
    std::transform(high.begin(), high.end(), low.begin(), [](double h) { return -h; });
    return {low, high};
}

}  // namespace dasmr
