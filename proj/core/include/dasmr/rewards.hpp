#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dasmr {

/// Goal-relative displacement expressed in the robot body frame.
struct Displacement {
    double dx = 0.0;
    double dy = 0.0;
    double d = 0.0;

    static Displacement of(double dx, double dy);
};

enum class RewardKind { HS, ES, Ch, Cl, Euclid, Sparse };

std::string_view to_string(RewardKind kind);
/// Case-insensitive; accepts hs, es, ch, cl, euclid, sparse. Throws ConfigError.
RewardKind parse_reward_kind(std::string_view name);

struct RewardSpec {
    RewardKind kind = RewardKind::HS;
    /// Weighting parameter used by HS, ES and Cl.
    double c = 2.0;
    /// Distance threshold used by Cl and Sparse (m).
    double d_th = 0.15;

    void validate() const;
    bool operator==(const RewardSpec&) const = default;
};

// Hourglass: lateral error is inflated by how far it exceeds |dx|, so outside
// the |dy| <= |dx| cone the penalty grows faster than the ellipse.
double reward_hs(const Displacement& disp, double c);
double reward_es(const Displacement& disp, double c);
double reward_ch(const Displacement& disp);
// Only the dy > d_th branch is shaped; dx == 0 uses the limit atan -> pi/2.
double reward_cl(const Displacement& disp, double c, double d_th);
double reward_euclid(const Displacement& disp);
/// 0 inside d_th (strict), -1 otherwise.
double reward_sparse(const Displacement& disp, double d_th);

double evaluate_reward(const RewardSpec& spec, const Displacement& disp);

/// Axis-aligned sampling grid over goal displacements, robot at the origin.
struct GridSpec {
    double x_min = -4.0;
    double x_max = 4.0;
    double y_min = -4.0;
    double y_max = 4.0;
    std::size_t nx = 101;
    std::size_t ny = 101;

    double x(std::size_t ix) const;
    double y(std::size_t iy) const;
};

/// Reward values stored row-major with x varying fastest.
struct RewardGrid {
    GridSpec grid;
    std::vector<double> values;

    double at(std::size_t ix, std::size_t iy) const { return values[iy * grid.nx + ix]; }
};

/// Throws std::invalid_argument for fewer than 2 samples per axis or an empty range.
RewardGrid reward_field(const RewardSpec& spec, const GridSpec& grid);

}  // namespace dasmr
