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

#include "config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::tools {
namespace {

constexpr std::array<std::string_view, 6> kKeys = {"max_distance", "sw_count", "fu_count",
                                                   "window_size",  "dictionary", "index"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

uint32_t parse_u32(std::string_view key, std::string_view value, std::string_view source) {
  uint32_t out = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw Error(fmt::format("{}: '{}' is not a valid value for {}", source, value, key));
  }
  return out;
}

}  // namespace

std::optional<std::string> process_env(std::string_view name) {
  const char* v = std::getenv(std::string(name).c_str());
  if (!v) return std::nullopt;
  return std::string(v);
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open config file '{}'", path.string()));
  std::map<std::string, std::string> out;
  std::string line;
  for (size_t n = 1; std::getline(in, line); ++n) {
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || trim(text.substr(0, eq)).empty()) {
      throw Error(fmt::format("{}:{}: expected 'key = value'", path.string(), n));
    }
    out[std::string(trim(text.substr(0, eq)))] = std::string(trim(text.substr(eq + 1)));
  }
  return out;
}

void apply_setting(Config& config, std::string_view key, std::string_view value,
                   std::string_view source) {
  if (key == "max_distance") {
    config.max_distance = parse_u32(key, value, source);
  } else if (key == "sw_count") {
    config.sw_count = parse_u32(key, value, source);
  } else if (key == "fu_count") {
    config.fu_count = parse_u32(key, value, source);
  } else if (key == "window_size") {
    config.window_size = parse_u32(key, value, source);
  } else if (key == "dictionary") {
    config.dictionary = value;
  } else if (key == "index") {
    config.index = value;
  } else {
    throw Error(fmt::format("{}: unknown setting '{}'", source, key));
  }
}

Config load_config(const std::optional<std::filesystem::path>& file, const EnvLookup& env) {
  Config config;
  if (file) {
    for (const auto& [key, value] : read_config_file(*file)) {
      apply_setting(config, key, value, file->string());
    }
  }
  for (std::string_view key : kKeys) {
    std::string name = "PROXIKEY_" + std::string(key);
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (const auto value = env(name)) apply_setting(config, key, *value, name);
  }
  return config;
}

void validate(const Config& config) {
  if (config.max_distance == 0) throw Error("max_distance must be at least 1");
  if (config.sw_count == 0) throw Error("sw_count must be at least 1");
  if (config.window_size > 64 || config.window_size < 2 * config.max_distance) {
    throw Error(fmt::format("window_size {} outside [{}, 64]", config.window_size,
                            2 * config.max_distance));
  }
}

}  // namespace proxikey::tools
