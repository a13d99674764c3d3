#pragma once

#include "dasmr/kinematics.hpp"

#include <cstdint>

namespace dasmr {

/// Control period of the environment: 40 Hz.
inline constexpr double kControlPeriod = 1.0 / 40.0;

/// Planar configuration of the chassis center. theta in (-pi, pi].
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    bool operator==(const Pose&) const = default;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

struct SimState {
    Pose pose;
    /// Virtual command currently realized by the actuators.
    VirtualBicycleCommand command;
    WheelState wheels;
    double phi_dot_l = 0.0;
    double phi_dot_r = 0.0;
    /// Chassis velocity in the reset frame.
    double v_x = 0.0;
    double v_y = 0.0;
    double theta_dot = 0.0;
    /// Forward speed in the body frame.
    double v_body = 0.0;
    std::int64_t step_index = 0;

    bool operator==(const SimState&) const = default;
};

/// State at rest at the given pose.
SimState rest_state(const Pose& pose = {});

/// Moves the realized command toward target under the steering-rate and
/// spin-acceleration limits, then clamps to the absolute limits.
VirtualBicycleCommand apply_actuators(const VirtualBicycleCommand& target, const SimState& current, double dt,
                                      const RobotParams& params);

/// Exact arc integration of constant body-frame speed and yaw rate over dt.
Pose step_pose(const Pose& pose, double v_body, double theta_dot, double dt);

/// One control period: actuators, wheel kinematics, chassis rates, pose.
SimState simulate_step(const SimState& state, const VirtualBicycleCommand& target, const RobotParams& params,
                       double dt);

}  // namespace dasmr
