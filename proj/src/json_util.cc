#include "json_util.h"

#include <algorithm>

#include "sagen/error.h"

namespace sagen::detail {

namespace {

std::string locus_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  byte = std::min(byte, text.size());
  // nlohmann reports the 1-based position of the offending byte.
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

std::string member_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& err) {
    std::string what = err.what();
    // Drop the library's "[json.exception.parse_error.101] " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos)
      what = what.substr(pos + 2);
    throw SyntaxError(locus_of(text, err.byte), what);
  }
}

const Json& require_object(const Json& value, const std::string& path) {
  if (!value.is_object())
    throw SchemaError(path.empty() ? "<root>" : path, "expected an object");
  return value;
}

const Json& require_array(const Json& value, const std::string& path) {
  if (!value.is_array())
    throw SchemaError(path, "expected an array");
  return value;
}

std::map<std::string, std::string> check_keys(
    const Json& object, const std::string& path,
    std::initializer_list<std::string_view> allowed, bool lenient) {
  std::map<std::string, std::string> extras;
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) != allowed.end())
      continue;
    if (!lenient)
      throw SchemaError(member_path(path, key), "unknown field");
    extras.emplace(key, value.dump());
  }
  return extras;
}

const Json& require_member(const Json& object, const std::string& key,
                           const std::string& path) {
  auto it = object.find(key);
  if (it == object.end())
    throw SchemaError(member_path(path, key), "required field is missing");
  return *it;
}

std::string get_string(const Json& object, const std::string& key,
                       const std::string& path) {
  const Json& value = require_member(object, key, path);
  if (!value.is_string())
    throw SchemaError(member_path(path, key), "expected a string");
  std::string s = value.get<std::string>();
  if (s.empty())
    throw SchemaError(member_path(path, key), "must not be empty");
  return s;
}

std::optional<std::string> get_optional_string(const Json& object,
                                               const std::string& key,
                                               const std::string& path) {
  if (!object.contains(key))
    return std::nullopt;
  return get_string(object, key, path);
}

double get_number(const Json& object, const std::string& key,
                  const std::string& path) {
  const Json& value = require_member(object, key, path);
  if (!value.is_number())
    throw SchemaError(member_path(path, key), "expected a number");
  return value.get<double>();
}

std::vector<std::string> get_string_array(const Json& object,
                                          const std::string& key,
                                          const std::string& path) {
  std::string field = member_path(path, key);
  const Json& value = require_array(require_member(object, key, path), field);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string())
      throw SchemaError(field + "[" + std::to_string(i) + "]",
                        "expected a string");
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace sagen::detail
