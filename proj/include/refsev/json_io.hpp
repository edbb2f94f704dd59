#pragma once

// JSON forms of Laurent polynomials and the on-disk recursion cache.

#include "refsev/chrecursion.hpp"
#include "refsev/laurent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace refsev {

/// {"<half-exponent>": "<coefficient>", ...} with decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
/// Throws std::invalid_argument on malformed input.
LaurentPoly laurent_from_json(const nlohmann::json& j);

inline constexpr int kCacheSchemaVersion = 1;

/// Writes {"schema": ..., "version": 1, "records": [[key...], poly]...}.
void save_cache(const std::string& path, const std::vector<CHRecursion::Record>& records);
/// Empty when the file does not exist; throws std::runtime_error on a schema
/// or version mismatch.
std::vector<CHRecursion::Record> load_cache(const std::string& path);

}  // namespace refsev
