#pragma once

#include "dasmr/config.hpp"
#include "dasmr/episode.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dasmr {

// Trajectory files are CSV with a one-line JSON header:
//
//   # {"format":"dasmr-trajectory","version":1,"config":{...},"policy":...,
//   #   "episode":0,"goal":{"x":..,"y":..},"start_pose":{...}}
//   step,time,x_c,y_c,theta_c,omega_l,...,reward,terminated,truncated
//   1,0.025,...
//
// Floats carry 17 significant digits, so the header plus the action columns
// replay the episode exactly.

class TrajectoryFormatError : public std::runtime_error {
public:
    explicit TrajectoryFormatError(const std::string& what) : std::runtime_error(what) {}
};

struct TrajectoryHeader {
    Config config;
    std::string policy;
    std::int64_t episode = 0;
    Goal goal;
    Pose start_pose;
};

struct TrajectoryFile {
    TrajectoryHeader header;
    /// Rows read back from disk only carry the logged columns of SimState.
    std::vector<StepRow> rows;
};

TrajectoryFile make_trajectory(const Config& config, const std::string& policy, std::int64_t episode,
                               const Episode& data);

void write_trajectory(std::ostream& out, const TrajectoryFile& file);
void write_trajectory(const std::filesystem::path& path, const TrajectoryFile& file);
TrajectoryFile read_trajectory(std::istream& in);
TrajectoryFile read_trajectory(const std::filesystem::path& path);

/// Episode view of a loaded file (goal, start pose, rows).
Episode to_episode(const TrajectoryFile& file);

/// Re-simulates the action columns from the header's start state.
std::vector<SimState> replay(const TrajectoryFile& file);

/// Formats a double with 17 significant digits.
std::string format_double(double value);

}  // namespace dasmr
