#pragma once

// Double-Ackermann geometry in the symmetric negative four-wheel-steering
// mode. The front and rear axles sit at +/- L from the chassis center and the
// rear wheels mirror the front steering, so the ICR always lies on the
// lateral axis through the center.
//
// Frame: x forward, y left, theta counter-clockwise. Positive phi_c turns
// left, positive omega_c drives forward.

namespace dasmr {

struct RobotParams {
    /// Longitudinal offset of each axle from the chassis center (m).
    double wheelbase_L = 0.30;
    /// Lateral distance between left and right wheels (m).
    double track_W = 0.55;
    double wheel_radius = 0.13;
    /// Scale of the normalized spin action (rad/s).
    double max_wheel_spin = 7.7;
    /// Scale of the normalized steering action (rad).
    double max_steer_angle = 0.436;
    double max_steer_rate = 1.0;
    double max_wheel_spin_accel = 5.0;

    /// Throws ConfigError if any field is non-positive, max_steer_angle is not
    /// below pi/2, or the ICR falls inside the track at full lock.
    void validate() const;

    bool operator==(const RobotParams&) const = default;
};

/// Spin and steering of the virtual central wheels of the bicycle reduction.
struct VirtualBicycleCommand {
    double omega_c = 0.0;
    double phi_c = 0.0;

    bool operator==(const VirtualBicycleCommand&) const = default;
};

/// Front-wheel spin and steering. Rear wheels carry the same spin and the
/// negated steering angle.
struct WheelState {
    double omega_l = 0.0;
    double omega_r = 0.0;
    double phi_l = 0.0;
    double phi_r = 0.0;

    bool operator==(const WheelState&) const = default;
};

struct SteeringPair {
    double inner = 0.0;
    double outer = 0.0;
};

struct SpinPair {
    double inner = 0.0;
    double outer = 0.0;
};

struct WheelCommand {
    double omega = 0.0;
    double phi = 0.0;
};

struct ChassisRates {
    /// Forward speed of the chassis center in the body frame (m/s).
    double v_body = 0.0;
    double theta_dot = 0.0;
};

/// Inner and outer steering angles for a central steering angle phi_c. Both
/// outputs carry the sign of phi_c and satisfy |outer| <= |phi_c| <= |inner|.
SteeringPair inner_outer_steering(double phi_c, const RobotParams& params);

/// Inner and outer wheel spin for a central spin omega_c, given the inner
/// steering angle. Returns (omega_c, omega_c) for phi_i == 0.
/// Throws std::domain_error if |phi_i| >= pi/2.
SpinPair inner_outer_spin(double omega_c, double phi_i, const RobotParams& params);

/// Maps inner/outer wheels to left/right: for phi_c >= 0 the left wheel is
/// the inner one. Steering inputs are magnitudes; outputs carry sign(phi_c).
WheelState assign_left_right(double phi_c, WheelCommand inner, WheelCommand outer);

/// Full wheel state for a virtual command (steering, spin, assignment).
WheelState wheel_state(const VirtualBicycleCommand& cmd, const RobotParams& params);

/// Chassis forward speed and yaw rate about the ICR for a virtual command.
ChassisRates chassis_rates(const VirtualBicycleCommand& cmd, const RobotParams& params);

/// Signed lateral offset of the ICR from the chassis center line (infinite
/// when driving straight).
double icr_offset(double phi_c, const RobotParams& params);

}  // namespace dasmr
