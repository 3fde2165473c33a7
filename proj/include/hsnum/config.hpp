#ifndef HSNUM_CONFIG_HPP_
#define HSNUM_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "hsnum/hurwitz.hpp"

namespace hsnum {

// Operational knobs only; nothing here changes a computed value.
struct Settings {
  std::uint64_t cap    = kDefaultCap;
  Method        method = Method::Auto;
  bool          strict = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// $XDG_CONFIG_HOME/hsnum/config.json, else $HOME/.config/hsnum/config.json.
// Empty when neither variable is set.
std::optional<std::filesystem::path> default_config_path();

// Parses a JSON object with optional keys "cap" (positive integer),
// "method" (string) and "strict" (bool) on top of the defaults. Throws
// ConfigError on malformed content or unknown keys.
Settings parse_config(std::string const& text);

Settings read_config_file(std::filesystem::path const& path);

// Parses a cap value such as "100000000". Throws ConfigError.
std::uint64_t parse_cap(std::string const& text);

struct Overrides {
  std::optional<std::uint64_t> cap;
  std::optional<Method>        method;
  bool                         strict = false;
};

// Flag over environment (HSNUM_CAP) over config file over defaults.
Settings resolve_settings(Settings from_config,
                          std::optional<std::string> const& env_cap,
                          Overrides const& flags);

}  // namespace hsnum

#endif  // HSNUM_CONFIG_HPP_
