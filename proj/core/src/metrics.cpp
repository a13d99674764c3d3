#include "dasmr/metrics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dasmr {

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::success:
        return "success";
    case Outcome::truncated_time:
        return "truncated_time";
    case Outcome::truncated_bounds:
        return "truncated_bounds";
    }
    return "unknown";
}

namespace {

void require_records(std::span<const EpisodeRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("metrics need at least one episode record");
    }
}

}  // namespace

double success_rate(std::span<const EpisodeRecord> records) {
    require_records(records);
    std::size_t hits = 0;
    for (const auto& r : records) {
        hits += r.outcome == Outcome::success ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

ErrorStats avg_error(std::span<const EpisodeRecord> records) {
    require_records(records);
    const auto n = static_cast<double>(records.size());
    double sum = 0.0;
    for (const auto& r : records) {
        sum += r.final_distance;
    }
    const double mean = sum / n;
    double sq = 0.0;
    for (const auto& r : records) {
        sq += (r.final_distance - mean) * (r.final_distance - mean);
    }
    return {mean, std::sqrt(sq / n)};
}

double spl(std::span<const EpisodeRecord> records) {
    require_records(records);
    double sum = 0.0;
    for (const auto& r : records) {
        if (r.outcome != Outcome::success) {
            continue;
        }
        const double shortest = std::hypot(r.goal.x - r.start_pose.x, r.goal.y - r.start_pose.y);
        const double denom = std::max(r.path_length, shortest);
        // A goal that starts inside the threshold needs no travel at all.
        sum += denom > 0.0 ? shortest / denom : 1.0;
    }
    return sum / static_cast<double>(records.size());
}

MetricsReport evaluate_metrics(std::span<const EpisodeRecord> records) {
    const ErrorStats err = avg_error(records);
    return {success_rate(records), err.ae, err.sigma, spl(records), records.size()};
}

std::string to_json(const MetricsReport& report) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "{\"n_episodes\": " << report.n_episodes << ", \"sr\": " << report.sr << ", \"ae\": " << report.ae
        << ", \"sigma\": " << report.sigma << ", \"spl\": " << report.spl << "}";
    return out.str();
}

std::string format_table(std::span<const std::pair<std::string, MetricsReport>> rows) {
    std::size_t label_width = 6;
    for (const auto& [label, _] : rows) {
        label_width = std::max(label_width, label.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(label_width)) << "Method" << "  " << std::right << std::setw(6)
        << "N" << std::setw(8) << "SR" << std::setw(16) << "AE(sigma)" << std::setw(8) << "SPL" << '\n';
    for (const auto& [label, r] : rows) {
        std::ostringstream ae;
        ae << std::fixed << std::setprecision(2) << r.ae << " (" << r.sigma << ")";
        out << std::left << std::setw(static_cast<int>(label_width)) << label << "  " << std::right << std::setw(6)
            << r.n_episodes << std::setw(8) << std::fixed << std::setprecision(0) << r.sr * 100.0 << std::setw(16)
            << ae.str() << std::setw(8) << std::setprecision(2) << r.spl << '\n';
    }
    return out.str();
}

SlidingMonitor::SlidingMonitor(std::size_t window, std::size_t log_every) : window_(window), log_every_(log_every) {
    if (window_ == 0 || log_every_ == 0) {
        throw std::invalid_argument("monitor window and log interval must be > 0");
    }
}

std::optional<MonitorPoint> SlidingMonitor::push(const EpisodeSummary& summary) {
    recent_.push_back(summary);
    if (recent_.size() > window_) {
        recent_.pop_front();
    }
    ++seen_;
    if (seen_ % log_every_ != 0) {
        return std::nullopt;
    }
    double reward = 0.0;
    double hits = 0.0;
    for (const auto& e : recent_) {
        reward += e.reward;
        hits += e.success ? 1.0 : 0.0;
    }
    const auto n = static_cast<double>(recent_.size());
    return MonitorPoint{seen_, reward / n, hits / n};
}

std::vector<MonitorPoint> sliding_monitor(std::span<const EpisodeSummary> stream, std::size_t window,
                                          std::size_t log_every) {
    SlidingMonitor monitor(window, log_every);
    std::vector<MonitorPoint> points;
    for (const auto& e : stream) {
        if (auto p = monitor.push(e)) {
            points.push_back(*p);
        }
    }
    return points;
}

}  // namespace dasmr
