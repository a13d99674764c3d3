#include "dasmr/kinematics.hpp"

#include "dasmr/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dasmr {

namespace {

double sign_of(double value) { return value < 0.0 ? -1.0 : 1.0; }

void require_steer_in_range(double phi_c, const RobotParams& params) {
    if (!(std::abs(phi_c) <= params.max_steer_angle)) {
        throw std::domain_error("phi_c = " + std::to_string(phi_c) +
                                " exceeds max_steer_angle = " + std::to_string(params.max_steer_angle));
    }
}

}  // namespace

void RobotParams::validate() const {
    auto positive = [](double value, const char* name) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw ConfigError(std::string("robot.") + name + " must be finite and > 0, got " +
                              std::to_string(value));
        }
    };
    positive(wheelbase_L, "wheelbase_L");
    positive(track_W, "track_W");
    positive(wheel_radius, "wheel_radius");
    positive(max_wheel_spin, "max_wheel_spin");
    positive(max_steer_angle, "max_steer_angle");
    positive(max_steer_rate, "max_steer_rate");
    positive(max_wheel_spin_accel, "max_wheel_spin_accel");
    if (!(max_steer_angle < std::numbers::pi / 2.0)) {
        throw ConfigError("robot.max_steer_angle must be < pi/2, got " + std::to_string(max_steer_angle));
    }
    // At full lock the ICR must stay outside the track, otherwise the inner
    // wheel would have to steer past pi/2.
    if (!(wheelbase_L * std::cos(max_steer_angle) > 0.5 * track_W * std::sin(max_steer_angle))) {
        throw ConfigError("robot.max_steer_angle puts the ICR inside the track (need L*cot(max_steer_angle) > W/2)");
    }
}

SteeringPair inner_outer_steering(double phi_c, const RobotParams& params) {
    params.validate();
    require_steer_in_range(phi_c, params);
    if (phi_c == 0.0) {
        return {0.0, 0.0};
    }
    const double mag = std::abs(phi_c);
    const double two_l = 2.0 * params.wheelbase_L;
    const double num = two_l * std::sin(mag);
    const double inner = std::atan(num / (two_l * std::cos(mag) - params.track_W * std::sin(mag)));
    const double outer = std::atan(num / (two_l * std::cos(mag) + params.track_W * std::sin(mag)));
    const double s = sign_of(phi_c);
    return {s * inner, s * outer};
}

SpinPair inner_outer_spin(double omega_c, double phi_i, const RobotParams& params) {
    params.validate();
    const double mag = std::abs(phi_i);
    if (!(mag < std::numbers::pi / 2.0)) {
        throw std::domain_error("|phi_i| must be < pi/2, got " + std::to_string(phi_i));
    }
    if (mag == 0.0) {
        return {omega_c, omega_c};
    }
    // Distances from the ICR to the inner, central and outer wheel, each
    // scaled by sin|phi_i| so that L*cot|phi_i| never overflows.
    const double L = params.wheelbase_L;
    const double W = params.track_W;
    const double s = std::sin(mag);
    const double lc = L * std::cos(mag);
    const double ls = L * s;
    const double inner = std::hypot(lc, ls);
    const double central = std::hypot(lc + 0.5 * W * s, ls);
    const double outer = std::hypot(lc + W * s, ls);
    return {omega_c * inner / central, omega_c * outer / central};
}

WheelState assign_left_right(double phi_c, WheelCommand inner, WheelCommand outer) {
    const double s = sign_of(phi_c);
    const double inner_phi = s * std::abs(inner.phi);
    const double outer_phi = s * std::abs(outer.phi);
    if (phi_c >= 0.0) {
        return {inner.omega, outer.omega, inner_phi, outer_phi};
    }
    return {outer.omega, inner.omega, outer_phi, inner_phi};
}

WheelState wheel_state(const VirtualBicycleCommand& cmd, const RobotParams& params) {
    const SteeringPair steer = inner_outer_steering(cmd.phi_c, params);
    const SpinPair spin = inner_outer_spin(cmd.omega_c, steer.inner, params);
    return assign_left_right(cmd.phi_c, {spin.inner, steer.inner}, {spin.outer, steer.outer});
}

ChassisRates chassis_rates(const VirtualBicycleCommand& cmd, const RobotParams& params) {
    params.validate();
    require_steer_in_range(cmd.phi_c, params);
    const double rim_speed = cmd.omega_c * params.wheel_radius;
    // The central wheel sits at distance L / sin|phi_c| from the ICR and the
    // chassis center at L * cot|phi_c|.
    const double theta_dot = rim_speed * std::sin(cmd.phi_c) / params.wheelbase_L;
    const double v_body = rim_speed * std::cos(cmd.phi_c);
    return {v_body, theta_dot};
}

double icr_offset(double phi_c, const RobotParams& params) {
    if (phi_c == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sign_of(phi_c) * params.wheelbase_L / std::tan(std::abs(phi_c));
}

}  // namespace dasmr
