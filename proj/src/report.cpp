#include "labyrinth/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

#ifndef LABYRINTH_VERSION
#define LABYRINTH_VERSION "0.0.0"
#endif

namespace labyrinth::report {
namespace {

double round9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

void flatten(const Json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    if (node.empty()) rows.emplace_back(path, "{}");
    for (const auto& [key, child] : node.items()) {
      flatten(child, path.empty() ? key : path + "." + key, rows);
    }
  } else if (node.is_array()) {
    if (node.empty()) rows.emplace_back(path, "[]");
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", rows);
    }
  } else if (node.is_string()) {
    rows.emplace_back(path, node.get<std::string>());
  } else {
    rows.emplace_back(path, node.dump());
  }
}

}  // namespace

std::string toolkit_version() { return LABYRINTH_VERSION; }

Json canonical(const Json& value) {
  if (value.is_number_float()) {
    const double v = value.get<double>();
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return round9(v);
  }
  if (value.is_object()) {
    Json out = Json::object();
    for (const auto& [key, child] : value.items()) out[key] = canonical(child);
    return out;
  }
  if (value.is_array()) {
    Json out = Json::array();
    for (const auto& child : value) out.push_back(canonical(child));
    return out;
  }
  return value;
}

Json to_json(const Report& report) {
  Json meta = {{"version", toolkit_version()},
               {"subcommand", report.subcommand},
               {"config", report.config}};
  if (report.wall_seconds) meta["wall_time_s"] = *report.wall_seconds;
  return canonical(Json{{"meta", meta}, {"result", report.result}});
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_table(const Report& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(to_json(report), "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace labyrinth::report
