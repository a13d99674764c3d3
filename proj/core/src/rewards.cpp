#include "dasmr/rewards.hpp"

#include "dasmr/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dasmr {

Displacement Displacement::of(double dx, double dy) { return {dx, dy, std::hypot(dx, dy)}; }

std::string_view to_string(RewardKind kind) {
    switch (kind) {
    case RewardKind::HS:
        return "hs";
    case RewardKind::ES:
        return "es";
    case RewardKind::Ch:
        return "ch";
    case RewardKind::Cl:
        return "cl";
    case RewardKind::Euclid:
        return "euclid";
    case RewardKind::Sparse:
        return "sparse";
    }
    return "unknown";
}

RewardKind parse_reward_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    for (RewardKind kind : {RewardKind::HS, RewardKind::ES, RewardKind::Ch, RewardKind::Cl, RewardKind::Euclid,
                            RewardKind::Sparse}) {
        if (lower == to_string(kind)) {
            return kind;
        }
    }
    throw ConfigError("unknown reward kind '" + std::string(name) + "' (expected hs, es, ch, cl, euclid, sparse)");
}

void RewardSpec::validate() const {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ConfigError("reward.c must be finite and > 0");
    }
    if (!(d_th > 0.0) || !std::isfinite(d_th)) {
        throw ConfigError("reward.d_th must be finite and > 0");
    }
}

double reward_hs(const Displacement& disp, double c) {
    const double excess = std::max(0.0, std::abs(disp.dy) - std::abs(disp.dx));
    const double lateral = disp.dy + std::copysign(excess, disp.dy);
    return -std::sqrt(disp.dx * disp.dx + (c * lateral) * (c * lateral));
}

double reward_es(const Displacement& disp, double c) {
    return -std::sqrt(disp.dx * disp.dx + (c * disp.dy) * (c * disp.dy));
}

double reward_ch(const Displacement& disp) { return -std::max(std::abs(disp.dx), std::abs(disp.dy)); }

double reward_cl(const Displacement& disp, double c, double d_th) {
    if (disp.dy > d_th) {
        const double bearing = disp.dx == 0.0 ? std::numbers::pi / 2.0 : std::atan(disp.dy / disp.dx);
        return bearing * c * std::exp(d_th - disp.d);
    }
    return -disp.d;
}

double reward_euclid(const Displacement& disp) { return -disp.d; }

double reward_sparse(const Displacement& disp, double d_th) { return disp.d < d_th ? 0.0 : -1.0; }

double evaluate_reward(const RewardSpec& spec, const Displacement& disp) {
    switch (spec.kind) {
    case RewardKind::HS:
        return reward_hs(disp, spec.c);
    case RewardKind::ES:
        return reward_es(disp, spec.c);
    case RewardKind::Ch:
        return reward_ch(disp);
    case RewardKind::Cl:
        return reward_cl(disp, spec.c, spec.d_th);
    case RewardKind::Euclid:
        return reward_euclid(disp);
    case RewardKind::Sparse:
        return reward_sparse(disp, spec.d_th);
    }
    throw std::logic_error("unhandled reward kind");
}

namespace {

// Symmetric ranges map mirrored indices to exactly negated coordinates.
double lerp_index(double lo, double hi, std::size_t i, std::size_t n) {
    const auto last = static_cast<double>(n - 1);
    const auto k = static_cast<double>(i);
    return (lo * (last - k) + hi * k) / last;
}

}  // namespace

double GridSpec::x(std::size_t ix) const { return lerp_index(x_min, x_max, ix, nx); }
double GridSpec::y(std::size_t iy) const { return lerp_index(y_min, y_max, iy, ny); }

RewardGrid reward_field(const RewardSpec& spec, const GridSpec& grid) {
    if (grid.nx < 2 || grid.ny < 2) {
        throw std::invalid_argument("reward grid needs at least 2 samples per axis");
    }
    if (!(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min)) {
        throw std::invalid_argument("reward grid range is empty");
    }
    spec.validate();
    RewardGrid out{grid, {}};
    out.values.reserve(grid.nx * grid.ny);
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        const double y = grid.y(iy);
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            out.values.push_back(evaluate_reward(spec, Displacement::of(grid.x(ix), y)));
        }
    }
    return out;
}

}  // namespace dasmr
