#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace labyrinth::report {

using Json = nlohmann::json;  // std::map backed, so keys serialise sorted

struct Report {
  std::string subcommand;
  Json config = Json::object();
  Json result = Json::object();
  std::optional<double> wall_seconds;  // only set on request; breaks byte identity
};

std::string toolkit_version();

/// Rounds every real to 9 significant digits; non-finite reals become the
/// strings "nan", "inf", "-inf". Integers are untouched.
Json canonical(const Json& value);

/// {"meta": {...}, "result": ...}, canonicalised.
Json to_json(const Report& report);

std::string render_json(const Report& report);

/// Two aligned columns: dotted key path, value.
std::string render_table(const Report& report);

}  // namespace labyrinth::report
