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

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace proxikey::text {

/// Word -> lemma list mapping. Immutable once loaded.
///
/// File format: one entry per line, `word<TAB>lemma1,lemma2,...`. Blank lines
/// and lines starting with `#` are ignored. Lookups of absent words fall back
/// to the word itself.
class Dictionary {
 public:
  Dictionary() = default;

  static Dictionary load(const std::filesystem::path& path);
  static Dictionary parse(std::istream& in, std::string_view source_name = "<stream>");

  /// Adds or replaces an entry. Duplicate lemmas are dropped, first one wins.
  void add(std::string_view word, const std::vector<std::string>& lemmas);

  std::vector<std::string> lemmatize(std::string_view word) const;

  /// Entry for `word`, or nullptr when the identity fallback applies.
  const std::vector<std::string>* find(std::string_view word) const;

  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

}  // namespace proxikey::text
