#include "refsev/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace refsev {

namespace {
constexpr const char* kSchemaName = "refsev-ch-cache";
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial must be a JSON object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw std::invalid_argument("bad exponent '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("coefficient of '" + key + "' must be a string");
    BigInt c;
    try {
      c = BigInt(value.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + value.get<std::string>() + "'");
    }
    terms.emplace_back(e, c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

void save_cache(const std::string& path, const std::vector<CHRecursion::Record>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records) rows.push_back(nlohmann::json::array({r.key, to_json(r.value)}));
  const nlohmann::json doc = {{"schema", kSchemaName}, {"version", kCacheSchemaVersion}, {"records", rows}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << doc.dump();
  }
  std::filesystem::rename(tmp, path);
}

std::vector<CHRecursion::Record> load_cache(const std::string& path) {
  std::vector<CHRecursion::Record> out;
  std::ifstream in(path);
  if (!in) return out;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("corrupt cache " + path + ": " + e.what());
  }
  if (doc.value("schema", "") != kSchemaName || doc.value("version", 0) != kCacheSchemaVersion)
    throw std::runtime_error("cache " + path + " has an unsupported schema");
  for (const auto& row : doc.at("records")) {
    out.push_back({row.at(0).get<std::vector<int>>(), laurent_from_json(row.at(1))});
  }
  return out;
}

}  // namespace refsev
