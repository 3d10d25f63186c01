#include "gelfand/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gelfand/json_format.hpp"

namespace gelfand {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
    const int m = t.problem.m;
    out << "r";
    for (int k = 0; k < m; ++k) out << ",w" << k;
    for (int k = 0; k < m; ++k) out << ",dw" << k;
    out << '\n';
    for (const auto& s : t.samples) {
        out << fmt17(s.r);
        for (double v : s.w) out << ',' << fmt17(v);
        for (double v : s.dw) out << ',' << fmt17(v);
        out << '\n';
    }
}

nlohmann::json to_json(const IntegratorConfig& c) {
    return {{"rtol", c.rtol},       {"atol", c.atol},
            {"r0", c.r0},           {"r_max", c.r_max},
            {"u_overflow", c.u_overflow}, {"points_per_decade", c.points_per_decade}};
}

IntegratorConfig integrator_config_from_json(const nlohmann::json& j) {
    IntegratorConfig c;
    c.rtol = j.value("rtol", c.rtol);
    c.atol = j.value("atol", c.atol);
    c.r0 = j.value("r0", c.r0);
    c.r_max = j.value("r_max", c.r_max);
    c.u_overflow = j.value("u_overflow", c.u_overflow);
    c.points_per_decade = j.value("points_per_decade", c.points_per_decade);
    return c;
}

nlohmann::json trajectory_metadata(const Trajectory& t) {
    return {{"schema", 1},
            {"problem", {{"m", t.problem.m}, {"n", t.problem.n}}},
            {"ic", {{"alpha", t.ic.alpha}}},
            {"config", to_json(t.config)},
            {"terminal_event", to_string(t.terminal_event)},
            {"r_event", t.r_event},
            {"samples", t.samples.size()},
            {"stats",
             {{"accepted_steps", t.stats.accepted_steps},
              {"rejected_steps", t.stats.rejected_steps},
              {"evaluations", t.stats.evaluations}}}};
}

void save_trajectory(const std::string& path, const Trajectory& t) {
    std::ofstream csv(path);
    if (!csv) throw DomainError("cannot write " + path);
    write_trajectory_csv(csv, t);
    std::ofstream meta(path + ".json");
    if (!meta) throw DomainError("cannot write " + path + ".json");
    meta << dump_json(trajectory_metadata(t)) << '\n';
}

Trajectory trajectory_from_csv(std::istream& csv, const nlohmann::json& metadata) {
    Trajectory t;
    try {
        t.problem = ProblemSpec::make(metadata.at("problem").at("m").get<int>(),
                                      metadata.at("problem").at("n").get<int>());
        t.ic.alpha = metadata.at("ic").at("alpha").get<std::vector<double>>();
        if (metadata.contains("config")) t.config = integrator_config_from_json(metadata["config"]);
        t.terminal_event = terminal_event_from_string(metadata.at("terminal_event").get<std::string>());
        t.r_event = metadata.value("r_event", 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed trajectory metadata: ") + e.what());
    }
    t.ic.validate(t.problem);

    const auto m = static_cast<std::size_t>(t.problem.m);
    std::string line;
    if (!std::getline(csv, line)) throw DomainError("empty trajectory CSV");
    std::size_t columns = 1;
    for (char c : line) columns += c == ',';
    if (columns != 2 * m + 1) throw DomainError("CSV header does not match m = " + std::to_string(m));

    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw DomainError("bad number '" + cell + "' in trajectory CSV");
            }
        }
        if (row.size() != 2 * m + 1) throw DomainError("ragged row in trajectory CSV");
        RadialState s;
        s.r = row[0];
        s.w.assign(row.begin() + 1, row.begin() + 1 + static_cast<std::ptrdiff_t>(m));
        s.dw.assign(row.begin() + 1 + static_cast<std::ptrdiff_t>(m), row.end());
        if (!t.samples.empty() && !(s.r > t.samples.back().r))
            throw DomainError("trajectory radii must be strictly increasing");
        t.samples.push_back(std::move(s));
    }
    if (t.samples.empty()) throw DomainError("trajectory CSV has no samples");
    return t;
}

Trajectory load_trajectory(const std::string& path) {
    std::ifstream csv(path);
    if (!csv) throw DomainError("cannot read " + path);
    std::ifstream meta(path + ".json");
    if (!meta) throw DomainError("missing metadata sidecar " + path + ".json");
    nlohmann::json j;
    try {
        meta >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed sidecar: ") + e.what());
    }
    return trajectory_from_csv(csv, j);
}

}  // namespace gelfand
