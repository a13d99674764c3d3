#include "dasmr/environment.hpp"
#include "dasmr/kinematics.hpp"
#include "dasmr/planner.hpp"
#include "dasmr/rewards.hpp"
#include "dasmr/simulator.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace dasmr;

void BM_WheelState(benchmark::State& state) {
    const RobotParams p;
    double phi = -0.4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wheel_state({5.0, phi}, p));
        phi = phi > 0.4 ? -0.4 : phi + 1e-4;
    }
}
BENCHMARK(BM_WheelState);

void BM_SimulateStep(benchmark::State& state) {
    const RobotParams p;
    SimState s = rest_state();
    for (auto _ : state) {
        s = simulate_step(s, {5.0, 0.3}, p, kControlPeriod);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SimulateStep);

void BM_EnvStep(benchmark::State& state) {
    EnvConfig cfg;
    cfg.max_episode_steps = 1'000'000'000;
    Environment env(cfg);
    env.reset();
    for (auto _ : state) {
        auto r = env.step({0.3, 0.5});
        if (r.terminated || r.truncated) {
            state.PauseTiming();
            env.reset();
            state.ResumeTiming();
        }
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_EnvStep);

void BM_RewardField(benchmark::State& state) {
    const GridSpec grid{-4, 4, -4, 4, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reward_field({RewardKind::HS, 2.0, 0.15}, grid));
    }
}
BENCHMARK(BM_RewardField)->Arg(101)->Arg(401);

void BM_CemPlan(benchmark::State& state) {
    EnvConfig env;
    env.max_episode_steps = 300;
    CemConfig cem;
    cem.iterations = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cem_plan(env, RobotParams{}, {0, 2}, {RewardKind::Euclid, 1.0, 0.15}, cem));
    }
}
BENCHMARK(BM_CemPlan)->Arg(1)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
