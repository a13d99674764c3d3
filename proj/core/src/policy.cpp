#include "dasmr/policy.hpp"

#include <algorithm>
#include <cmath>

namespace dasmr {

Action RandomPolicy::act(const Observation&) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const double a_omega = dist(rng_);
    const double a_phi = dist(rng_);
    return {a_omega, a_phi};
}

Action OpenLoopPolicy::act(const Observation&) {
    if (next_ >= actions_.size()) {
        return {};
    }
    return actions_[next_++].clamped();
}

Action PursuitPolicy::act(const Observation& obs) {
    const Displacement disp = body_frame_displacement({obs.x_c, obs.y_c, obs.theta_c}, {obs.x_d, obs.y_d});
    const double throttle = std::min(1.0, std::max(0.15, disp.d / slow_radius_));
    if (disp.dx >= 0.0) {
        const double bearing = std::atan2(disp.dy, disp.dx);
        return Action{throttle, bearing / robot_.max_steer_angle}.clamped();
    }
    // Reversing with left steer swings the center backward and to the left.
    const double bearing = std::atan2(disp.dy, -disp.dx);
    return Action{-throttle, bearing / robot_.max_steer_angle}.clamped();
}

}  // namespace dasmr
