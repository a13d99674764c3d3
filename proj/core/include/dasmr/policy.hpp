#pragma once

#include "dasmr/environment.hpp"
#include "dasmr/kinematics.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace dasmr {

/// Deterministic mapping from observation to action.
class Policy {
public:
    virtual ~Policy() = default;

    /// Called after every environment reset.
    virtual void begin_episode(const Observation& /*first*/) {}
    virtual Action act(const Observation& observation) = 0;
    virtual std::string name() const = 0;
};

class ZeroPolicy final : public Policy {
public:
    Action act(const Observation&) override { return {}; }
    std::string name() const override { return "zero"; }
};

/// Uniform actions from a seeded generator.
class RandomPolicy final : public Policy {
public:
    explicit RandomPolicy(std::uint64_t seed) : rng_(seed) {}
    Action act(const Observation&) override;
    std::string name() const override { return "random"; }

private:
    std::mt19937_64 rng_;
};

/// Replays a fixed sequence, then holds zero.
class OpenLoopPolicy final : public Policy {
public:
    explicit OpenLoopPolicy(std::vector<Action> actions) : actions_(std::move(actions)) {}
    void begin_episode(const Observation&) override { next_ = 0; }
    Action act(const Observation&) override;
    std::string name() const override { return "open_loop"; }

private:
    std::vector<Action> actions_;
    std::size_t next_ = 0;
};

/// Drives toward the goal: forward when it lies ahead, reverse when behind,
/// steering on the bearing and slowing inside `slow_radius`.
class PursuitPolicy final : public Policy {
public:
    explicit PursuitPolicy(RobotParams robot, double slow_radius = 0.6) : robot_(robot), slow_radius_(slow_radius) {}
    Action act(const Observation& observation) override;
    std::string name() const override { return "pursuit"; }

private:
    RobotParams robot_;
    double slow_radius_;
};

}  // namespace dasmr
