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

#include "proxikey/text/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::text {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open dictionary '{}'", path.string()));
  return parse(in, path.string());
}

Dictionary Dictionary::parse(std::istream& in, std::string_view source_name) {
  Dictionary dict;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto tab = view.find('\t');
    if (tab == std::string_view::npos) {
      throw FormatError(
          fmt::format("{}:{}: expected 'word<TAB>lemma,...'", source_name, line_no));
    }
    const std::string_view word = trim(view.substr(0, tab));
    std::string_view rest = view.substr(tab + 1);
    std::vector<std::string> lemmas;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view lemma = trim(rest.substr(0, comma));
      if (!lemma.empty()) lemmas.emplace_back(lemma);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (word.empty() || lemmas.empty()) {
      throw FormatError(fmt::format("{}:{}: empty word or lemma list", source_name, line_no));
    }
    dict.add(word, lemmas);
  }
  return dict;
}

void Dictionary::add(std::string_view word, const std::vector<std::string>& lemmas) {
  std::vector<std::string> unique;
  for (const auto& lemma : lemmas) {
    if (std::find(unique.begin(), unique.end(), lemma) == unique.end()) unique.push_back(lemma);
  }
  if (unique.empty()) unique.emplace_back(word);
  entries_.insert_or_assign(std::string(word), std::move(unique));
}

const std::vector<std::string>* Dictionary::find(std::string_view word) const {
  const auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> Dictionary::lemmatize(std::string_view word) const {
  if (const auto* lemmas = find(word)) return *lemmas;
  return {std::string(word)};
}

}  // namespace proxikey::text
