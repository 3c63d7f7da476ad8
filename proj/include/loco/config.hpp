#pragma once

#include <string>

#include "loco/constraint.hpp"

namespace loco {

/// Constraint config: { "q": 8, "patterns": [[0,2,0],[7,5,7]] }
/// with patterns given as level-equivalents, leftmost symbol first.
ForbiddenSet parse_constraint_config(const std::string& text);
ForbiddenSet load_constraint_config(const std::string& path);

}  // namespace loco
