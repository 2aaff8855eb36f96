#pragma once

#include <string>

#include <json.hpp>

#include "gridwalk/grid.hpp"
#include "gridwalk/lsystem.hpp"

namespace gridwalk {

// Grid config: {"dimension": d, "basis": [[..]], "anchors": [["1/3",..]],
// "generators": [{"from": i, "to": j, "offset": [..]}]}. Anchor indices are
// 0-based in files, 1-based in index notation.
GridSpec grid_from_json(const nlohmann::json& j);
GridSpec load_grid_config(const std::string& path);

// L-system config: {"alphabet": "finite"|"integers", "symbols": [..],
// "rules": {"1": [..]}, "closure": "explicit"|"mirror"|"negate",
// "start": [..], "formula": "<name>"} (formula and rules are mutually
// exclusive).
LSystem lsystem_from_json(const nlohmann::json& j);
nlohmann::json lsystem_to_json(const LSystem& ls);
LSystem load_lsystem_config(const std::string& path);

}  // namespace gridwalk
