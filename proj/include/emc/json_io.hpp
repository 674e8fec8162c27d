#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "emc/family.hpp"

namespace emc {

// {"n":6,"k":2,"sets":[[1,2],[1,3]]} with sorted 1-indexed element arrays.
// Duplicate or malformed sets are a load error (std::invalid_argument), not
// silently repaired.
Family family_from_json(const nlohmann::json& j);
Family family_from_json_text(const std::string& text);
Family load_family(std::istream& in);
Family load_family_file(const std::string& path);

nlohmann::json family_to_json(const Family& f);
std::string family_to_json_text(const Family& f, int indent = -1);

}  // namespace emc
