#pragma once

#include "dasmr/environment.hpp"
#include "dasmr/simulator.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dasmr {

enum class Outcome { success, truncated_time, truncated_bounds };

std::string_view to_string(Outcome outcome);

struct EpisodeRecord {
    Goal goal;
    Pose start_pose;
    Outcome outcome = Outcome::truncated_time;
    double final_distance = 0.0;
    /// Sum of consecutive pose displacements.
    double path_length = 0.0;
    std::int64_t steps = 0;
};

struct MetricsReport {
    double sr = 0.0;
    double ae = 0.0;
    double sigma = 0.0;
    double spl = 0.0;
    std::size_t n_episodes = 0;
};

struct ErrorStats {
    double ae = 0.0;
    double sigma = 0.0;
};

// All batch metrics throw std::invalid_argument on an empty batch.
double success_rate(std::span<const EpisodeRecord> records);
/// Mean and population standard deviation of the final distance over all episodes.
ErrorStats avg_error(std::span<const EpisodeRecord> records);
/// Success weighted by straight-line distance over max(path, straight line).
double spl(std::span<const EpisodeRecord> records);
MetricsReport evaluate_metrics(std::span<const EpisodeRecord> records);

std::string to_json(const MetricsReport& report);
/// Aligned "SR AE(sigma) SPL" table, one row per labelled report.
std::string format_table(std::span<const std::pair<std::string, MetricsReport>> rows);

struct EpisodeSummary {
    double reward = 0.0;
    bool success = false;
};

struct MonitorPoint {
    std::size_t episode = 0;
    double mean_reward = 0.0;
    double success_rate = 0.0;
};

/// Training monitor: every `log_every` episodes reports averages over the
/// last `window` episodes (or all of them before the window fills).
class SlidingMonitor {
public:
    explicit SlidingMonitor(std::size_t window = 100, std::size_t log_every = 10);

    std::optional<MonitorPoint> push(const EpisodeSummary& summary);
    std::size_t episodes_seen() const { return seen_; }

private:
    std::size_t window_;
    std::size_t log_every_;
    std::size_t seen_ = 0;
    std::deque<EpisodeSummary> recent_;
};

std::vector<MonitorPoint> sliding_monitor(std::span<const EpisodeSummary> stream, std::size_t window = 100,
                                          std::size_t log_every = 10);

}  // namespace dasmr
