// Copyright 2026 The Proxikey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace proxikey::tools {

/// Settings shared by the subcommands. Sources, weakest first: built-in
/// defaults, a `key = value` file, PROXIKEY_<KEY> environment variables, and
/// command-line flags.
struct Config {
  uint32_t max_distance = 5;
  uint32_t sw_count = 700;
  uint32_t fu_count = 2100;
  uint32_t window_size = 64;
  std::string dictionary;
  std::string index;
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view name)>;

/// Reads the process environment.
std::optional<std::string> process_env(std::string_view name);

/// Parses `key = value` lines; `#` starts a comment. Throws proxikey::Error
/// with file and line on malformed input.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Applies one setting. Keys: max_distance, sw_count, fu_count, window_size,
/// dictionary, index. Throws proxikey::Error for unknown keys or bad numbers.
void apply_setting(Config& config, std::string_view key, std::string_view value,
                   std::string_view source);

/// Defaults, then `file` (when given), then the environment.
Config load_config(const std::optional<std::filesystem::path>& file, const EnvLookup& env);

/// Throws proxikey::Error unless 2 * max_distance <= window_size <= 64.
void validate(const Config& config);

}  // namespace proxikey::tools
