#pragma once

#include <iosfwd>
#include <string>

#include "gelfand/radial_ode.hpp"
#include "json.hpp"

namespace gelfand {

/// Header `r,w0,..,w{m-1},dw0,..,dw{m-1}`, one row per sample, %.17g.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

/// Problem, initial data, integrator settings and terminal event.
nlohmann::json trajectory_metadata(const Trajectory& t);

/// Writes `path` (CSV) and `path + ".json"` (metadata sidecar).
void save_trajectory(const std::string& path, const Trajectory& t);

/// Inverse of save_trajectory. The sidecar is required because the CSV does
/// not carry n. Throws DomainError on malformed input.
Trajectory load_trajectory(const std::string& path);

Trajectory trajectory_from_csv(std::istream& csv, const nlohmann::json& metadata);

nlohmann::json to_json(const IntegratorConfig& c);
IntegratorConfig integrator_config_from_json(const nlohmann::json& j);

}  // namespace gelfand
