#include "loco/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace loco {

ForbiddenSet parse_constraint_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("constraint config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("patterns")) {
    throw std::invalid_argument("constraint config needs top-level \"q\" and \"patterns\"");
  }
  if (!doc["q"].is_number_integer()) {
    throw std::invalid_argument("constraint config: \"q\" must be an integer");
  }
  Alphabet alphabet(doc["q"].get<int>());
  std::vector<std::vector<int>> patterns;
  for (const auto& entry : doc["patterns"]) {
    if (!entry.is_array()) {
      throw std::invalid_argument("constraint config: each pattern must be an array of levels");
    }
    std::vector<int> pattern;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("constraint config: pattern entries must be integers");
      }
      pattern.push_back(v.get<int>());
    }
    patterns.push_back(std::move(pattern));
  }
  return ForbiddenSet(alphabet, std::move(patterns));
}

ForbiddenSet load_constraint_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open constraint config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_constraint_config(buf.str());
}

}  // namespace loco
