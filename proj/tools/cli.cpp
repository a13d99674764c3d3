#include "cli.hpp"

#include "dasmr/config.hpp"
#include "dasmr/episode.hpp"
#include "dasmr/errors.hpp"
#include "dasmr/heatmap.hpp"
#include "dasmr/metrics.hpp"
#include "dasmr/planner.hpp"
#include "dasmr/policy.hpp"
#include "dasmr/trajectory.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace dasmr::cli {

namespace fs = std::filesystem;

namespace {

struct UsageProblem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> d_th;
    std::optional<std::int64_t> max_steps;
    std::optional<std::string> reward;
    std::optional<double> c;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--config", opts.config_path, "JSON config file (default: $DASMR_CONFIG)");
    cmd.add_option("--seed", opts.seed, "Override env.seed");
    cmd.add_option("--d-th", opts.d_th, "Override env.d_th (m)");
    cmd.add_option("--max-steps", opts.max_steps, "Override env.max_episode_steps");
    cmd.add_option("--reward", opts.reward, "Override reward.kind");
    cmd.add_option("--c", opts.c, "Override reward.c");
}

// Flags beat the config file, which beats built-in defaults.
Config resolve_config(const CommonOptions& opts) {
    Config cfg;
    std::string path = opts.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("DASMR_CONFIG")) {
            path = env;
        }
    }
    if (!path.empty()) {
        cfg = load_config(path);
    }
    if (opts.seed) {
        cfg.env.seed = *opts.seed;
    }
    if (opts.d_th) {
        cfg.env.d_th = *opts.d_th;
        cfg.env.reward.d_th = *opts.d_th;
    }
    if (opts.max_steps) {
        cfg.env.max_episode_steps = *opts.max_steps;
    }
    if (opts.reward) {
        cfg.env.reward.kind = parse_reward_kind(*opts.reward);
    }
    if (opts.c) {
        cfg.env.reward.c = *opts.c;
    }
    cfg.robot.validate();
    cfg.env.validate();
    return cfg;
}

/// "kind[:c[:d_th]]", e.g. "hs:2" or "cl:3:0.15".
RewardSpec parse_reward_spec(const std::string& text, double default_d_th) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) {
        parts.push_back(part);
    }
    if (parts.empty() || parts.size() > 3) {
        throw ConfigError("bad reward spec '" + text + "' (expected kind[:c[:d_th]])");
    }
    RewardSpec spec;
    spec.kind = parse_reward_kind(parts[0]);
    spec.c = spec.kind == RewardKind::ES ? 4.0 : spec.kind == RewardKind::Cl ? 3.0 : 2.0;
    spec.d_th = default_d_th;
    try {
        if (parts.size() > 1) {
            spec.c = std::stod(parts[1]);
        }
        if (parts.size() > 2) {
            spec.d_th = std::stod(parts[2]);
        }
    } catch (const std::exception&) {
        throw ConfigError("bad number in reward spec '" + text + "'");
    }
    spec.validate();
    return spec;
}

std::string spec_label(const RewardSpec& s) {
    std::ostringstream out;
    out << to_string(s.kind);
    if (s.kind == RewardKind::HS || s.kind == RewardKind::ES || s.kind == RewardKind::Cl) {
        out << "(c=" << s.c << ")";
    }
    return out.str();
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

std::string episode_filename(std::int64_t index) {
    std::ostringstream name;
    name << "episode_" << std::setw(3) << std::setfill('0') << index << ".csv";
    return name.str();
}

struct CemOptions {
    CemConfig cem;
    void add(CLI::App& cmd) {
        cmd.add_option("--horizon", cem.horizon, "Planning horizon (steps)");
        cmd.add_option("--population", cem.population, "CEM population size");
        cmd.add_option("--elite-fraction", cem.elite_fraction, "CEM elite fraction");
        cmd.add_option("--iterations", cem.iterations, "CEM iterations");
        cmd.add_option("--init-std", cem.init_std, "Initial sampling std");
        cmd.add_option("--knot-interval", cem.knot_interval, "Steps per action knot");
    }
};

/// Plans once per episode from the current state, then replays the plan.
class CemPolicy final : public Policy {
public:
    CemPolicy(const Environment& env, CemConfig cem) : env_(env), cem_(cem) {}

    void begin_episode(const Observation&) override {
        CemConfig cem = cem_;
        cem.seed = cem_.seed + episode_++;
        const CemResult plan =
            cem_plan(env_.config(), env_.robot(), env_.goal(), env_.config().reward, cem, env_.state());
        replay_ = std::make_unique<OpenLoopPolicy>(plan.actions);
        replay_->begin_episode({});
    }
    Action act(const Observation& obs) override { return replay_->act(obs); }
    std::string name() const override { return "cem"; }

private:
    const Environment& env_;
    CemConfig cem_;
    std::uint64_t episode_ = 0;
    std::unique_ptr<OpenLoopPolicy> replay_;
};

int cmd_rollout(const CommonOptions& common, const std::string& policy_name, std::int64_t episodes,
                const std::string& out_dir, CemOptions cem_opts, std::ostream& out) {
    if (episodes <= 0) {
        throw UsageProblem("--episodes must be >= 1");
    }
    const Config cfg = resolve_config(common);
    Environment env(cfg.env, cfg.robot);

    std::unique_ptr<Policy> policy;
    if (policy_name == "zero") {
        policy = std::make_unique<ZeroPolicy>();
    } else if (policy_name == "random") {
        policy = std::make_unique<RandomPolicy>(cfg.env.seed);
    } else if (policy_name == "pursuit") {
        policy = std::make_unique<PursuitPolicy>(cfg.robot);
    } else if (policy_name == "cem") {
        CemConfig cem = cem_opts.cem;
        cem.horizon = std::min(cem.horizon, cfg.env.max_episode_steps);
        cem.seed = cfg.env.seed;
        policy = std::make_unique<CemPolicy>(env, cem);
    } else {
        throw UsageProblem("unknown policy '" + policy_name + "' (zero, random, pursuit, cem)");
    }

    const fs::path dir(out_dir);
    ensure_dir(dir);
    std::vector<EpisodeRecord> records;
    for (std::int64_t i = 0; i < episodes; ++i) {
        env.reset();
        const Episode ep = run_episode(env, *policy);
        write_trajectory(dir / episode_filename(i), make_trajectory(cfg, policy->name(), i, ep));
        records.push_back(episode_record(ep, cfg.env.d_th, cfg.env.workspace_half_extent));
    }
    const MetricsReport report = evaluate_metrics(records);
    const std::vector<std::pair<std::string, MetricsReport>> rows{{policy->name(), report}};
    const std::string table = format_table(rows);
    write_text(dir / "report.json", to_json(report) + "\n");
    write_text(dir / "report.txt", table);
    out << table;
    return kExitOk;
}

int cmd_heatmap(const std::string& reward, std::optional<double> c, double d_th, double extent, std::size_t resolution,
                const std::string& out_dir, std::ostream& out) {
    if (resolution < 2) {
        throw UsageProblem("--resolution must be >= 2");
    }
    if (!(extent > 0.0)) {
        throw UsageProblem("--extent must be > 0");
    }
    RewardSpec spec = parse_reward_spec(reward, d_th);
    if (c) {
        spec.c = *c;
        spec.validate();
    }
    const GridSpec grid{-extent, extent, -extent, extent, resolution, resolution};
    const RewardGrid field = reward_field(spec, grid);
    const fs::path dir(out_dir);
    ensure_dir(dir);
    const fs::path stem = dir / ("heatmap_" + std::string(to_string(spec.kind)));
    write_heatmap(stem, field);
    const auto [lo, hi] = std::minmax_element(field.values.begin(), field.values.end());
    out << spec_label(spec) << ": " << resolution << "x" << resolution << " grid over [-" << extent << ", " << extent
        << "]^2, min " << *lo << ", max " << *hi << "\n"
        << "wrote " << stem.string() << ".csv and " << stem.string() << ".ppm\n";
    return kExitOk;
}

int cmd_plan(const CommonOptions& common, const std::vector<double>& goal_xy, const std::string& objective_text,
             CemOptions cem_opts, std::uint64_t cem_seed, const std::vector<std::string>& probes,
             const std::string& out_path, std::ostream& out) {
    if (goal_xy.size() != 2) {
        throw UsageProblem("--goal takes exactly two numbers");
    }
    const Config cfg = resolve_config(common);
    const Goal goal{goal_xy[0], goal_xy[1]};
    const RewardSpec objective = parse_reward_spec(objective_text, cfg.env.d_th);
    CemConfig cem = cem_opts.cem;
    cem.seed = cem_seed;
    const CemResult plan = cem_plan(cfg.env, cfg.robot, goal, objective, cem);

    Environment env(cfg.env, cfg.robot);
    env.reset_to_goal(goal);
    OpenLoopPolicy replay(plan.actions);
    Episode ep{goal, env.state().pose, {}};
    if (!plan.actions.empty()) {
        ep = run_episode(env, replay);
    }
    if (!out_path.empty()) {
        const fs::path path(out_path);
        if (path.has_parent_path()) {
            ensure_dir(path.parent_path());
        }
        write_trajectory(path, make_trajectory(cfg, "cem", 0, ep));
    }

    std::vector<RewardSpec> specs{objective};
    for (const auto& p : probes) {
        specs.push_back(parse_reward_spec(p, cfg.env.d_th));
    }
    const auto poses = episode_poses(ep);
    const std::vector<Pose> visited(poses.begin() + 1, poses.end());
    const auto totals = reward_ordering_probe(visited, goal, specs);

    out << (plan.reached ? "reached" : "NOT reached") << " goal (" << goal.x << ", " << goal.y << ")"
        << ": final distance " << std::setprecision(4) << plan.final_distance << " m in " << plan.actions.size()
        << " steps (" << static_cast<double>(plan.actions.size()) * cfg.env.dt << " s)\n";
    for (std::size_t i = 0; i < specs.size(); ++i) {
        out << "  cumulative " << spec_label(specs[i]) << (i == 0 ? " [objective]" : "") << ": "
            << std::setprecision(6) << totals[i] << "\n";
    }
    return plan.reached ? kExitOk : kExitNotReached;
}

int cmd_eval(const std::string& dir_path, double d_th, const std::string& json_out, std::ostream& out,
             std::ostream& err) {
    if (!(d_th > 0.0)) {
        throw UsageProblem("--d-th must be > 0");
    }
    const fs::path dir(dir_path);
    if (!fs::is_directory(dir)) {
        throw UsageProblem("'" + dir_path + "' is not a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv" &&
            entry.path().filename().string().rfind("heatmap_", 0) != 0) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw UsageProblem("no trajectory files in '" + dir_path + "'");
    }
    std::vector<EpisodeRecord> records;
    bool failed = false;
    for (const auto& f : files) {
        try {
            const TrajectoryFile file = read_trajectory(f);
            records.push_back(episode_record(to_episode(file), d_th, file.header.config.env.workspace_half_extent));
        } catch (const std::exception& ex) {
            err << "error: " << f.string() << ": " << ex.what() << "\n";
            failed = true;
        }
    }
    if (records.empty()) {
        return kExitError;
    }
    const MetricsReport report = evaluate_metrics(records);
    std::ostringstream label;
    label << "d_th=" << d_th;
    const std::vector<std::pair<std::string, MetricsReport>> rows{{label.str(), report}};
    out << format_table(rows);
    if (!json_out.empty()) {
        write_text(json_out, to_json(report) + "\n");
    }
    return failed ? kExitError : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double-Ackermann robot simulator, reward maps and planner"};
    app.name("dasmr");
    app.require_subcommand(1);

    CommonOptions rollout_common;
    std::string policy = "pursuit";
    std::int64_t episodes = 0;
    std::string rollout_out;
    CemOptions rollout_cem;
    auto* rollout = app.add_subcommand("rollout", "Run episodes and write trajectories plus an SR/AE/SPL report");
    add_common(*rollout, rollout_common);
    rollout->add_option("--policy", policy, "zero | random | pursuit | cem")->capture_default_str();
    rollout->add_option("--episodes", episodes, "Number of episodes")->required();
    rollout->add_option("--out", rollout_out, "Output directory")->required();
    rollout_cem.add(*rollout);

    std::string hm_reward = "hs";
    std::optional<double> hm_c;
    double hm_d_th = 0.15;
    double hm_extent = 4.0;
    std::size_t hm_resolution = 101;
    std::string hm_out;
    auto* heatmap = app.add_subcommand("heatmap", "Evaluate a reward over goal displacements (CSV + PPM)");
    heatmap->add_option("--reward", hm_reward, "hs | es | ch | cl | euclid | sparse, optionally kind:c")
        ->capture_default_str();
    heatmap->add_option("--c", hm_c, "Weighting parameter");
    heatmap->add_option("--d-th", hm_d_th, "Distance threshold (cl, sparse)")->capture_default_str();
    heatmap->add_option("--extent", hm_extent, "Half-width of the square grid (m)")->capture_default_str();
    heatmap->add_option("--resolution", hm_resolution, "Samples per axis")->capture_default_str();
    heatmap->add_option("--out", hm_out, "Output directory")->required();

    CommonOptions plan_common;
    std::vector<double> goal;
    std::string objective = "euclid";
    CemOptions plan_cem;
    std::uint64_t plan_seed = 0;
    std::vector<std::string> probes;
    std::string plan_out;
    auto* plan = app.add_subcommand("plan", "CEM-plan an open-loop maneuver to a goal");
    add_common(*plan, plan_common);
    plan->add_option("--goal", goal, "Goal x y (m)")->required()->expected(2);
    plan->add_option("--objective", objective, "Objective reward kind[:c[:d_th]]")->capture_default_str();
    plan->add_option("--cem-seed", plan_seed, "CEM sampling seed")->capture_default_str();
    plan->add_option("--probe", probes, "Extra reward specs to accumulate along the plan");
    plan->add_option("--out", plan_out, "Trajectory file to write");
    plan_cem.add(*plan);

    std::string eval_dir;
    double eval_d_th = 0.15;
    std::string eval_json;
    auto* eval = app.add_subcommand("eval", "Recompute SR/AE/SPL from trajectory files at a threshold");
    eval->add_option("--dir", eval_dir, "Directory of trajectory CSV files")->required();
    eval->add_option("--d-th", eval_d_th, "Success threshold (m)")->capture_default_str();
    eval->add_option("--json", eval_json, "Also write the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*rollout) {
            return cmd_rollout(rollout_common, policy, episodes, rollout_out, rollout_cem, out);
        }
        if (*heatmap) {
            return cmd_heatmap(hm_reward, hm_c, hm_d_th, hm_extent, hm_resolution, hm_out, out);
        }
        if (*plan) {
            return cmd_plan(plan_common, goal, objective, plan_cem, plan_seed, probes, plan_out, out);
        }
        if (*eval) {
            return cmd_eval(eval_dir, eval_d_th, eval_json, out, err);
        }
    } catch (const UsageProblem& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}

}  // namespace dasmr::cli
