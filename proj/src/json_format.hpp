#pragma once

#include <json.hpp>

#include <string>

namespace modelhom::detail {

/// Two-space indented JSON with sorted keys and a trailing newline. Arrays of
/// scalars stay on one line while they fit in 100 columns.
std::string canonical_dump(const nlohmann::json& value);

}  // namespace modelhom::detail
