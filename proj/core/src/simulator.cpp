#include "dasmr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dasmr {

double wrap_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (angle > -std::numbers::pi && angle <= std::numbers::pi) {
        return angle;
    }
    double wrapped = std::remainder(angle, two_pi);
    if (wrapped <= -std::numbers::pi) {
        wrapped += two_pi;
    }
    return wrapped;
}

SimState rest_state(const Pose& pose) {
    SimState state;
    state.pose = pose;
    state.pose.theta = wrap_angle(pose.theta);
    return state;
}

namespace {

double approach(double current, double target, double max_delta) {
    return current + std::clamp(target - current, -max_delta, max_delta);
}

}  // namespace

VirtualBicycleCommand apply_actuators(const VirtualBicycleCommand& target, const SimState& current, double dt,
                                      const RobotParams& params) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("dt must be > 0");
    }
    const double omega = approach(current.command.omega_c, target.omega_c, params.max_wheel_spin_accel * dt);
    const double phi = approach(current.command.phi_c, target.phi_c, params.max_steer_rate * dt);
    return {std::clamp(omega, -params.max_wheel_spin, params.max_wheel_spin),
            std::clamp(phi, -params.max_steer_angle, params.max_steer_angle)};
}

Pose step_pose(const Pose& pose, double v_body, double theta_dot, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("dt must be > 0");
    }
    const double heading = pose.theta + theta_dot * dt;
    if (std::abs(theta_dot) < 1e-9) {
        const double ds = v_body * dt;
        return {pose.x + ds * std::cos(pose.theta), pose.y + ds * std::sin(pose.theta), wrap_angle(heading)};
    }
    const double radius = v_body / theta_dot;
    return {pose.x + radius * (std::sin(heading) - std::sin(pose.theta)),
            pose.y - radius * (std::cos(heading) - std::cos(pose.theta)), wrap_angle(heading)};
}

SimState simulate_step(const SimState& state, const VirtualBicycleCommand& target, const RobotParams& params,
                       double dt) {
    params.validate();
    SimState next;
    next.command = apply_actuators(target, state, dt, params);
    next.wheels = wheel_state(next.command, params);
    next.phi_dot_l = (next.wheels.phi_l - state.wheels.phi_l) / dt;
    next.phi_dot_r = (next.wheels.phi_r - state.wheels.phi_r) / dt;

    const ChassisRates rates = chassis_rates(next.command, params);
    next.pose = step_pose(state.pose, rates.v_body, rates.theta_dot, dt);
    next.v_body = rates.v_body;
    next.theta_dot = rates.theta_dot;
    next.v_x = rates.v_body * std::cos(next.pose.theta);
    next.v_y = rates.v_body * std::sin(next.pose.theta);
    next.step_index = state.step_index + 1;
    return next;
}

}  // namespace dasmr
