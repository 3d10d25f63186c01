#pragma once

#include <string>

#include "json.hpp"

namespace gelfand {

/// Serializes with every floating-point value printed as %.17g; non-finite
/// values become null. Object keys keep nlohmann's sorted order.
std::string dump_json(const nlohmann::json& j, int indent = 2);

}  // namespace gelfand
