#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tetracenters/tetra_model.hpp"

namespace tc {

// {"a": ["n/d", ...], "b": [...]}; rationals always as strings so round trips are exact.
nlohmann::json to_json(const EdgeLengths& e);
// Accepts strings or integers; throws InvalidInstance on bad shape or failed validation.
EdgeLengths edges_from_json(const nlohmann::json& j);

// A file holds either one instance object or an array of them.
std::vector<EdgeLengths> load_instances(const std::string& path);
void save_instances(const std::string& path, const std::vector<EdgeLengths>& instances);

}  // namespace tc
