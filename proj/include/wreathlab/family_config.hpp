#pragma once

#include <string>

#include "json.hpp"
#include "wreathlab/family.hpp"

namespace wreathlab {

/// Parses a finite-family description:
///   {"groups": [{"name": "Z"}, {"name": "Z^n", "params": {"n": 2}}, ...]}
/// Names and parameters are validated; unknown names or keys are rejected.
/// Infinite families cannot be described in a file; construct them in code
/// with Family::enumerated.
Family family_from_json(const nlohmann::json& doc);

Family family_from_file(const std::string& path);

}  // namespace wreathlab
