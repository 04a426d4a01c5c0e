#include "digm/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace digm {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse integer from '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse number from '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config key '" + key + "': expected true/false, got '" + value + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

}  // namespace

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    config.scenario = value;
  } else if (key == "J") {
    config.elements = parse_int(key, value);
  } else if (key == "N") {
    config.steps = parse_int(key, value);
  } else if (key == "T") {
    config.time_horizon = parse_double(key, value);
  } else if (key == "alpha") {
    config.alpha = parse_double(key, value);
  } else if (key == "out") {
    config.out_dir = value;
  } else if (key == "snapshots") {
    std::vector<double> times;
    for (const std::string& item : split(value, ',')) {
      if (!item.empty()) times.push_back(parse_double(key, item));
    }
    config.snapshots = std::move(times);
  } else if (key == "levels") {
    std::vector<EocLevel> levels;
    for (const std::string& item : split(value, ',')) {
      if (item.empty()) continue;
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos) {
        throw ConfigError("config key 'levels': expected J:N pairs, got '" + item + "'");
      }
      levels.push_back({parse_int(key, trim(item.substr(0, colon))),
                        parse_int(key, trim(item.substr(colon + 1)))});
    }
    config.levels = std::move(levels);
  } else if (key == "project_endpoints") {
    config.project_endpoints = parse_bool(key, value);
  } else if (key == "normalize_tangent") {
    config.normalize_tangent = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");

  RunConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    apply_config_entry(config, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  return config;
}

}  // namespace digm
