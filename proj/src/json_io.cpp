#include "emc/json_io.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

#include "emc/core.hpp"

namespace emc {

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("family JSON must be an object");
  if (!j.contains("n") || !j.contains("k") || !j.contains("sets"))
    throw std::invalid_argument("family JSON needs fields n, k, sets");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
    throw std::invalid_argument("family JSON: n and k must be integers");
  const int n = j["n"].get<int>();
  const int k = j["k"].get<int>();
  if (!j["sets"].is_array()) throw std::invalid_argument("family JSON: sets must be an array");

  std::vector<Mask> members;
  members.reserve(j["sets"].size());
  for (const auto& entry : j["sets"]) {
    if (!entry.is_array()) throw std::invalid_argument("family JSON: each set must be an array");
    std::vector<int> elems;
    elems.reserve(entry.size());
    for (const auto& e : entry) {
      if (!e.is_number_integer()) throw std::invalid_argument("family JSON: elements must be integers");
      elems.push_back(e.get<int>());
    }
    if (static_cast<int>(elems.size()) != k)
      throw std::invalid_argument("family JSON: set of wrong size");
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (elems[i - 1] >= elems[i])
        throw std::invalid_argument("family JSON: sets must be strictly increasing");
    members.push_back(mask_from_elements(elems, n));
  }
  return Family(n, k, std::move(members));
}

Family family_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("family JSON parse error: ") + e.what());
  }
  return family_from_json(j);
}

Family load_family(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("family JSON parse error: ") + e.what());
  }
  return family_from_json(j);
}

Family load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  return load_family(in);
}

nlohmann::json family_to_json(const Family& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask m : f.members()) sets.push_back(elements_of(m));
  return nlohmann::json{{"n", f.n()}, {"k", f.k()}, {"sets", std::move(sets)}};
}

std::string family_to_json_text(const Family& f, int indent) {
  return family_to_json(f).dump(indent);
}

}  // namespace emc
