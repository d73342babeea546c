// Internal helpers for reading JSON documents with located errors.

#ifndef SAGEN_JSON_UTIL_H_
#define SAGEN_JSON_UTIL_H_

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sagen::detail {

using Json = nlohmann::json;

/// @throws SyntaxError  With a "line:column" locus.
Json parse_text(std::string_view text);

/// @throws SchemaError  The value is not an object.
const Json& require_object(const Json& value, const std::string& path);
const Json& require_array(const Json& value, const std::string& path);

/// Rejects keys outside `allowed` unless lenient. Under lenient mode the
/// unknown members are returned as compact JSON text keyed by name.
std::map<std::string, std::string> check_keys(
    const Json& object, const std::string& path,
    std::initializer_list<std::string_view> allowed, bool lenient);

const Json& require_member(const Json& object, const std::string& key,
                           const std::string& path);

std::string get_string(const Json& object, const std::string& key,
                       const std::string& path);
std::optional<std::string> get_optional_string(const Json& object,
                                               const std::string& key,
                                               const std::string& path);
double get_number(const Json& object, const std::string& key,
                  const std::string& path);
std::vector<std::string> get_string_array(const Json& object,
                                          const std::string& key,
                                          const std::string& path);

/// Serialized form used for every file the tool writes.
std::string dump(const Json& value);

}  // namespace sagen::detail

#endif  // SAGEN_JSON_UTIL_H_
