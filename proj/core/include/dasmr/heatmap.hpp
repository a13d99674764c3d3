#pragma once

#include "dasmr/rewards.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace dasmr {

/// One CSV line per y sample (ascending), x varying fastest along the line.
void write_grid_csv(std::ostream& out, const RewardGrid& grid);
RewardGrid read_grid_csv(std::istream& in, const GridSpec& spec);

/// Binary PPM (P6) with a fixed viridis-like palette, min to max. The top
/// image row is the largest y so the picture reads with y up.
void write_grid_ppm(std::ostream& out, const RewardGrid& grid);

/// RGB for t in [0, 1].
std::array<std::uint8_t, 3> palette_color(double t);

void write_heatmap(const std::filesystem::path& stem, const RewardGrid& grid);

}  // namespace dasmr
