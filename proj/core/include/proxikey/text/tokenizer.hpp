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
#include <string>
#include <string_view>
#include <vector>

namespace proxikey::text {

/// One word of a document. Positions are 0-based and consecutive.
struct Token {
  std::string surface;
  uint32_t position = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits text into maximal runs of word characters and lowercases ASCII.
///
/// ASCII letters and digits are word characters. Bytes >= 0x80 are also
/// treated as word characters so UTF-8 encoded words survive intact; only
/// ASCII is case-folded. Everything else separates words.
std::vector<Token> tokenize(std::string_view text);

}  // namespace proxikey::text
