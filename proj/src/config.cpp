#include "hsnum/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hsnum {

std::optional<std::filesystem::path> default_config_path() {
  if (char const* xdg = std::getenv("XDG_CONFIG_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "hsnum" / "config.json";
  }
  if (char const* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".config" / "hsnum" / "config.json";
  }
  return std::nullopt;
}

std::uint64_t parse_cap(std::string const& text) {
  std::size_t   used = 0;
  std::uint64_t value = 0;
  try {
    if (text.empty() || text.front() == '-') {
      throw std::invalid_argument(text);
    }
    value = std::stoull(text, &used);
  } catch (std::exception const&) {
    throw ConfigError("invalid cap '" + text + "'");
  }
  if (used != text.size() || value == 0) {
    throw ConfigError("invalid cap '" + text + "'");
  }
  return value;
}

Settings parse_config(std::string const& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  Settings out;
  for (auto const& [key, value] : doc.items()) {
    if (key == "cap") {
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
        throw ConfigError("config key 'cap' must be a positive integer");
      }
      out.cap = value.get<std::uint64_t>();
    } else if (key == "method") {
      if (!value.is_string()) {
        throw ConfigError("config key 'method' must be a string");
      }
      try {
        out.method = parse_method(value.get<std::string>());
      } catch (std::invalid_argument const& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "strict") {
      if (!value.is_boolean()) {
        throw ConfigError("config key 'strict' must be a boolean");
      }
      out.strict = value.get<bool>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return out;
}

Settings read_config_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Settings resolve_settings(Settings from_config,
                          std::optional<std::string> const& env_cap,
                          Overrides const& flags) {
  Settings out = from_config;
  if (env_cap && !env_cap->empty()) {
    out.cap = parse_cap(*env_cap);
  }
  if (flags.cap) {
    out.cap = *flags.cap;
  }
  if (flags.method) {
    out.method = *flags.method;
  }
  out.strict = out.strict || flags.strict;
  return out;
}

}  // namespace hsnum
