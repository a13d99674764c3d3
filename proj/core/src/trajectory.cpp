#include "dasmr/trajectory.hpp"

#include "json_codec.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace dasmr {

namespace {

constexpr std::string_view kFormat = "dasmr-trajectory";
constexpr int kVersion = 1;

constexpr std::array<std::string_view, 19> kColumns = {
    "step",      "time",      "x_c", "y_c", "theta_c", "omega_l", "omega_r",  "phi_l",     "phi_r",    "phi_dot_l",
    "phi_dot_r", "v_x",       "v_y", "theta_dot",      "a_omega", "a_phi",    "reward",    "terminated", "truncated"};

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        parts.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

double parse_double(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw TrajectoryFormatError("line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
    }
    return value;
}

std::int64_t parse_int(std::string_view text, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw TrajectoryFormatError("line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
    }
    return value;
}

bool parse_flag(std::string_view text, std::size_t line_no) {
    const std::int64_t v = parse_int(text, line_no);
    if (v != 0 && v != 1) {
        throw TrajectoryFormatError("line " + std::to_string(line_no) + ": flag must be 0 or 1");
    }
    return v == 1;
}

std::string header_line() {
    std::string line;
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += kColumns[i];
    }
    return line;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

TrajectoryFile make_trajectory(const Config& config, const std::string& policy, std::int64_t episode,
                               const Episode& data) {
    return {{config, policy, episode, data.goal, data.start_pose}, data.rows};
}

void write_trajectory(std::ostream& out, const TrajectoryFile& file) {
    const TrajectoryHeader& h = file.header;
    nlohmann::json header = {
        {"format", kFormat},
        {"version", kVersion},
        {"config", detail::to_json_value(h.config)},
        {"policy", h.policy},
        {"episode", h.episode},
        {"goal", {{"x", h.goal.x}, {"y", h.goal.y}}},
        {"start_pose", detail::to_json_value(h.start_pose)},
    };
    out << "# " << header.dump() << '\n' << header_line() << '\n';
    for (const StepRow& r : file.rows) {
        const SimState& s = r.state;
        out << r.step;
        for (double v : {r.time, s.pose.x, s.pose.y, s.pose.theta, s.wheels.omega_l, s.wheels.omega_r, s.wheels.phi_l,
                         s.wheels.phi_r, s.phi_dot_l, s.phi_dot_r, s.v_x, s.v_y, s.theta_dot, r.action.a_omega,
                         r.action.a_phi, r.reward}) {
            out << ',' << format_double(v);
        }
        out << ',' << (r.terminated ? 1 : 0) << ',' << (r.truncated ? 1 : 0) << '\n';
    }
}

void write_trajectory(const std::filesystem::path& path, const TrajectoryFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write trajectory file '" + path.string() + "'");
    }
    write_trajectory(out, file);
}

TrajectoryFile read_trajectory(std::istream& in) {
    TrajectoryFile file;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
        throw TrajectoryFormatError("line 1: missing '# {json}' header");
    }
    try {
        const auto header = nlohmann::json::parse(line.substr(2));
        if (header.value("format", "") != kFormat || header.value("version", 0) != kVersion) {
            throw TrajectoryFormatError("line 1: not a dasmr-trajectory v1 file");
        }
        TrajectoryHeader& h = file.header;
        h.config = detail::config_from_json_value(header.at("config"));
        h.policy = header.at("policy").get<std::string>();
        h.episode = header.at("episode").get<std::int64_t>();
        h.goal = {header.at("goal").at("x").get<double>(), header.at("goal").at("y").get<double>()};
        h.start_pose = detail::pose_from_json_value(header.at("start_pose"), "start_pose");
    } catch (const nlohmann::json::exception& err) {
        throw TrajectoryFormatError(std::string("line 1: bad header: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw TrajectoryFormatError(std::string("line 1: bad header config: ") + err.what());
    }
    if (!std::getline(in, line) || line != header_line()) {
        throw TrajectoryFormatError("line 2: unexpected column header");
    }
    std::size_t line_no = 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != kColumns.size()) {
            throw TrajectoryFormatError("line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(kColumns.size()) + " columns, got " +
                                        std::to_string(cells.size()));
        }
        StepRow r;
        r.step = parse_int(cells[0], line_no);
        std::array<double, 16> v{};
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = parse_double(cells[i + 1], line_no);
        }
        r.time = v[0];
        r.state.pose = {v[1], v[2], v[3]};
        r.state.wheels = {v[4], v[5], v[6], v[7]};
        r.state.phi_dot_l = v[8];
        r.state.phi_dot_r = v[9];
        r.state.v_x = v[10];
        r.state.v_y = v[11];
        r.state.theta_dot = v[12];
        r.state.step_index = r.step;
        r.action = {v[13], v[14]};
        r.reward = v[15];
        r.terminated = parse_flag(cells[17], line_no);
        r.truncated = parse_flag(cells[18], line_no);
        file.rows.push_back(r);
    }
    if (static_cast<std::int64_t>(file.rows.size()) > file.header.config.env.max_episode_steps) {
        throw TrajectoryFormatError("more rows than env.max_episode_steps");
    }
    return file;
}

TrajectoryFile read_trajectory(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TrajectoryFormatError("cannot read '" + path.string() + "'");
    }
    try {
        return read_trajectory(in);
    } catch (const TrajectoryFormatError& err) {
        throw TrajectoryFormatError(path.string() + ": " + err.what());
    }
}

Episode to_episode(const TrajectoryFile& file) {
    return {file.header.goal, file.header.start_pose, file.rows};
}

std::vector<SimState> replay(const TrajectoryFile& file) {
    Environment env(file.header.config.env, file.header.config.robot);
    env.reset_from(rest_state(file.header.start_pose), file.header.goal);
    std::vector<SimState> states;
    states.reserve(file.rows.size());
    for (const StepRow& r : file.rows) {
        env.step(r.action);
        states.push_back(env.state());
    }
    return states;
}

}  // namespace dasmr
