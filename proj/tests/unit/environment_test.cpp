#include "dasmr/environment.hpp"
#include "dasmr/errors.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace dasmr {
namespace {

TEST(Environment, DefaultResetAtOrigin) {
    Environment env;
    const auto r = env.reset();
    EXPECT_EQ(r.observation.x_c, 0.0);
    EXPECT_EQ(r.observation.y_c, 0.0);
    EXPECT_EQ(r.observation.theta_c, 0.0);
    EXPECT_EQ(r.observation.x_d, r.goal.x);
    EXPECT_EQ(r.observation.y_d, r.goal.y);
    EXPECT_LE(std::abs(r.goal.x), 2.0);
    EXPECT_LE(std::abs(r.goal.y), 2.0);
    EXPECT_EQ(r.observation.to_array().size(), 14u);
}

TEST(Environment, SeededGoalsMatchAcrossInstances) {
    EnvConfig cfg;
    cfg.seed = 1234;
    Environment a(cfg), b(cfg);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(a.reset().goal, b.reset().goal);
    }
    Environment c(cfg);
    c.reset();
    c.reset();
    EXPECT_EQ(c.reset(1234).goal, Environment(cfg).reset().goal);
}

TEST(Environment, GoalsUniformChiSquare) {
    Environment env;
    std::array<int, 16> bins{};
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const Goal g = env.reset().goal;
        const int bx = std::min(3, static_cast<int>((g.x + 2.0)));
        const int by = std::min(3, static_cast<int>((g.y + 2.0)));
        ++bins[static_cast<std::size_t>(by * 4 + bx)];
    }
    const double expected = n / 16.0;
    double chi2 = 0.0;
    for (int count : bins) {
        chi2 += (count - expected) * (count - expected) / expected;
    }
    // 15 degrees of freedom, p = 0.01 critical value.
    EXPECT_LT(chi2, 30.578);
}

TEST(Environment, ZeroActionStaysPut) {
    Environment env;
    env.reset_to_goal({1.5, -1.0});
    const auto r = env.step({0.0, 0.0});
    EXPECT_EQ(r.observation.x_c, 0.0);
    EXPECT_EQ(r.observation.y_c, 0.0);
    EXPECT_FALSE(r.terminated);
    EXPECT_FALSE(r.truncated);
}

TEST(Environment, GoalInsideThresholdTerminatesImmediately) {
    Environment env;
    env.reset_to_goal({0.1, 0.0});
    const auto r = env.step({-1.0, 1.0});
    EXPECT_TRUE(r.terminated);
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(r.info.step_index, 1);
}

// Closed-form arrival step for a full-throttle straight run: spin ramps at
// the acceleration limit, the pose advances with the post-step speed.
std::int64_t straight_arrival_step(const RobotParams& p, double dt, double distance) {
    double omega = 0.0;
    double x = 0.0;
    for (std::int64_t k = 1;; ++k) {
        omega = std::min(p.max_wheel_spin, static_cast<double>(k) * p.max_wheel_spin_accel * dt);
        x += omega * p.wheel_radius * dt;
        if (x > distance) {
            return k;
        }
    }
}

TEST(Environment, FullForwardReachesGoalAhead) {
    const RobotParams p;
    Environment env({}, p);
    env.reset_to_goal({2.0, 0.0});
    StepResult r;
    do {
        r = env.step({1.0, 0.0});
    } while (!r.terminated && !r.truncated);
    EXPECT_TRUE(r.terminated);
    const std::int64_t expected = straight_arrival_step(p, kControlPeriod, 2.0 - 0.15);
    EXPECT_NEAR(static_cast<double>(r.info.step_index), static_cast<double>(expected), 2.0);
    // Without the ramp it would take 2 / (v_max dt) less the threshold.
    EXPECT_GT(r.info.step_index, static_cast<std::int64_t>(1.85 / (p.max_wheel_spin * p.wheel_radius * kControlPeriod)));
}

TEST(Environment, UsageErrors) {
    Environment env;
    EXPECT_THROW(env.step({}), UsageError);
    env.reset_to_goal({0.05, 0.0});
    EXPECT_TRUE(env.step({}).terminated);
    EXPECT_THROW(env.step({}), UsageError);
    env.reset();
    EXPECT_THROW(env.step({std::numeric_limits<double>::quiet_NaN(), 0.0}), std::invalid_argument);
}

TEST(Environment, ActionsAreClamped) {
    Environment a, b;
    a.reset_to_goal({2.0, 2.0});
    b.reset_to_goal({2.0, 2.0});
    for (int i = 0; i < 50; ++i) {
        const auto ra = a.step({2.0, -3.0});
        const auto rb = b.step({1.0, -1.0});
        EXPECT_EQ(ra.observation, rb.observation);
        EXPECT_EQ(ra.reward, rb.reward);
    }
}

TEST(Environment, TruncatesAtStepLimit) {
    EnvConfig cfg;
    cfg.max_episode_steps = 25;
    Environment env(cfg);
    env.reset_to_goal({-1.9, 1.9});
    StepResult r;
    int steps = 0;
    do {
        r = env.step({0.0, 0.0});
        ++steps;
    } while (!r.terminated && !r.truncated);
    EXPECT_TRUE(r.truncated);
    EXPECT_FALSE(r.info.out_of_bounds);
    EXPECT_EQ(steps, 25);
}

TEST(Environment, TruncatesOutsideWorkspace) {
    EnvConfig cfg;
    cfg.workspace_half_extent = 0.5;
    cfg.goal_half_extent = 0.5;
    Environment env(cfg);
    env.reset_to_goal({-0.4, 0.0});
    StepResult r;
    do {
        r = env.step({1.0, 0.0});
    } while (!r.terminated && !r.truncated);
    EXPECT_TRUE(r.truncated);
    EXPECT_TRUE(r.info.out_of_bounds);
    EXPECT_GT(std::abs(r.observation.x_c), 0.5);
}

TEST(Environment, Spaces) {
    const Box a = Environment::action_space();
    EXPECT_EQ(a.low, (std::vector<double>{-1.0, -1.0}));
    EXPECT_EQ(a.high, (std::vector<double>{1.0, 1.0}));
    Environment env;
    const Box o = env.observation_space();
    ASSERT_EQ(o.low.size(), Observation::kSize);
    EXPECT_EQ(o.high[0], 4.0);
    EXPECT_EQ(o.low[1], -4.0);
    for (std::size_t i = 0; i < o.low.size(); ++i) {
        EXPECT_LT(o.low[i], o.high[i]) << Observation::kNames[i];
    }
}

TEST(Environment, ObservationsStayInsideSpaceBounds) {
    Environment env;
    const Box o = env.observation_space();
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int ep = 0; ep < 5; ++ep) {
        env.reset();
        StepResult r;
        do {
            r = env.step({u(rng), u(rng)});
            const auto v = r.observation.to_array();
            // Positions may overshoot the workspace by one step before truncation.
            for (std::size_t i = 4; i < v.size(); ++i) {
                EXPECT_LE(v[i], o.high[i] + 1e-9) << Observation::kNames[i];
                EXPECT_GE(v[i], o.low[i] - 1e-9) << Observation::kNames[i];
            }
        } while (!r.terminated && !r.truncated);
    }
}

TEST(Environment, SparseRewardCoherence) {
    EnvConfig cfg;
    cfg.reward = {RewardKind::Sparse, 1.0, cfg.d_th};
    Environment env(cfg);
    env.reset_to_goal({1.0, 0.0});
    StepResult r;
    do {
        r = env.step({1.0, 0.0});
        EXPECT_EQ(r.reward, r.terminated ? 0.0 : -1.0);
    } while (!r.terminated && !r.truncated);
    EXPECT_TRUE(r.terminated);
}

TEST(Environment, EpisodesReproducible) {
    auto run = [] {
        EnvConfig cfg;
        cfg.seed = 52;
        Environment env(cfg);
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> log;
        for (int ep = 0; ep < 3; ++ep) {
            env.reset();
            StepResult r;
            do {
                r = env.step({u(rng), u(rng)});
                const auto v = r.observation.to_array();
                log.insert(log.end(), v.begin(), v.end());
                log.push_back(r.reward);
            } while (!r.terminated && !r.truncated);
        }
        return log;
    };
    EXPECT_EQ(run(), run());
}

TEST(Environment, GoalConstantWithinEpisode) {
    Environment env;
    const Goal g = env.reset().goal;
    for (int i = 0; i < 100; ++i) {
        const auto r = env.step({0.7, 0.4});
        EXPECT_EQ(r.observation.x_d, g.x);
        EXPECT_EQ(r.observation.y_d, g.y);
        if (r.terminated || r.truncated) {
            break;
        }
    }
}

TEST(Environment, ContinuousGoalsKeepPose) {
    EnvConfig cfg;
    cfg.continuous_goals = true;
    Environment env(cfg);
    env.reset_to_goal({1.0, 0.0});
    for (int i = 0; i < 20; ++i) {
        env.step({1.0, 0.5});
    }
    const Pose before = env.state().pose;
    const auto r = env.reset();
    EXPECT_EQ(r.observation.x_c, before.x);
    EXPECT_EQ(r.observation.y_c, before.y);
    EXPECT_EQ(r.observation.theta_c, before.theta);
    EXPECT_EQ(r.observation.v_x, 0.0);
}

TEST(BodyFrameDisplacement, RotatesIntoRobotFrame) {
    const Displacement d = body_frame_displacement({1.0, 1.0, std::numbers::pi / 2}, {1.0, 3.0});
    EXPECT_NEAR(d.dx, 2.0, 1e-15);
    EXPECT_NEAR(d.dy, 0.0, 1e-15);
    const Displacement left = body_frame_displacement({0.0, 0.0, 0.0}, {0.0, 2.0});
    EXPECT_EQ(left.dx, 0.0);
    EXPECT_EQ(left.dy, 2.0);
}

TEST(EnvConfig, Validation) {
    EnvConfig cfg;
    cfg.goal_half_extent = 5.0;
    EXPECT_THROW(Environment{cfg}, ConfigError);
    cfg = {};
    cfg.max_episode_steps = 0;
    EXPECT_THROW(Environment{cfg}, ConfigError);
    cfg = {};
    cfg.d_th = 0.0;
    EXPECT_THROW(Environment{cfg}, ConfigError);
}

}  // namespace
}  // namespace dasmr
