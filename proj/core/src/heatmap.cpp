#include "dasmr/heatmap.hpp"

#include "dasmr/trajectory.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dasmr {

void write_grid_csv(std::ostream& out, const RewardGrid& grid) {
    for (std::size_t iy = 0; iy < grid.grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.grid.nx; ++ix) {
            if (ix > 0) {
                out << ',';
            }
            out << format_double(grid.at(ix, iy));
        }
        out << '\n';
    }
}

RewardGrid read_grid_csv(std::istream& in, const GridSpec& spec) {
    RewardGrid grid{spec, {}};
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        ++rows;
        std::size_t cols = 0;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                throw std::runtime_error("grid csv: bad number '" + cell + "'");
            }
            grid.values.push_back(v);
            ++cols;
        }
        if (cols != spec.nx) {
            throw std::runtime_error("grid csv: row " + std::to_string(rows) + " has " + std::to_string(cols) +
                                     " columns, expected " + std::to_string(spec.nx));
        }
    }
    if (rows != spec.ny) {
        throw std::runtime_error("grid csv: " + std::to_string(rows) + " rows, expected " + std::to_string(spec.ny));
    }
    return grid;
}

std::array<std::uint8_t, 3> palette_color(double t) {
    // Control points sampled from viridis.
    static constexpr std::array<std::array<double, 3>, 5> stops = {{
        {68, 1, 84},
        {59, 82, 139},
        {33, 145, 140},
        {94, 201, 98},
        {253, 231, 37},
    }};
    const double x = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0) * static_cast<double>(stops.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(x), stops.size() - 2);
    const double f = x - static_cast<double>(i);
    std::array<std::uint8_t, 3> rgb{};
    for (std::size_t c = 0; c < 3; ++c) {
        rgb[c] = static_cast<std::uint8_t>(std::lround(stops[i][c] + f * (stops[i + 1][c] - stops[i][c])));
    }
    return rgb;
}

void write_grid_ppm(std::ostream& out, const RewardGrid& grid) {
    const auto [lo_it, hi_it] = std::minmax_element(grid.values.begin(), grid.values.end());
    const double lo = grid.values.empty() ? 0.0 : *lo_it;
    const double span = grid.values.empty() ? 0.0 : *hi_it - lo;
    out << "P6\n" << grid.grid.nx << ' ' << grid.grid.ny << "\n255\n";
    for (std::size_t row = 0; row < grid.grid.ny; ++row) {
        const std::size_t iy = grid.grid.ny - 1 - row;
        for (std::size_t ix = 0; ix < grid.grid.nx; ++ix) {
            const double t = span > 0.0 ? (grid.at(ix, iy) - lo) / span : 0.5;
            const auto rgb = palette_color(t);
            out.write(reinterpret_cast<const char*>(rgb.data()), 3);
        }
    }
}

void write_heatmap(const std::filesystem::path& stem, const RewardGrid& grid) {
    std::filesystem::path csv = stem;
    csv += ".csv";
    std::filesystem::path ppm = stem;
    ppm += ".ppm";
    std::ofstream csv_out(csv, std::ios::binary);
    std::ofstream ppm_out(ppm, std::ios::binary);
    if (!csv_out || !ppm_out) {
        throw std::runtime_error("cannot write heatmap files at '" + stem.string() + "'");
    }
    write_grid_csv(csv_out, grid);
    write_grid_ppm(ppm_out, grid);
}

}  // namespace dasmr
