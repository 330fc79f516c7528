#pragma once

#include <string>

#include "json.hpp"
#include "sdp/hom.hpp"
#include "sdp/total_system.hpp"

namespace sdp::io {

// Group files: {"order": n, "table": [[...], ...]} with 0-based indices.
// Identity and inverses are derived, never stored.
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_to_json(const FiniteGroup& g);
FiniteGroup load_group(const std::string& path);
void save_group(const FiniteGroup& g, const std::string& path);

// Total-system files:
//   {"r": 3, "factors": [<group object or file path string>, ...],
//    "phi": {"k,j": [[...]]}, "bracket": {"k,j,i": [[...]]}}
// Path entries are resolved relative to the file's directory.
TotalSystem system_from_json(const nlohmann::json& j, const std::string& base_dir = "");
nlohmann::ordered_json system_to_json(const TotalSystem& s);
TotalSystem load_system(const std::string& path);
void save_system(const TotalSystem& s, const std::string& path);

// Map files for check-hom: {"maps": [[...], ...]} with one value table per factor.
std::vector<std::vector<Elem>> maps_from_json(const nlohmann::json& j);

nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace sdp::io
