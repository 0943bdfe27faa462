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

#include "proxikey/index/analysis.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "proxikey/error.hpp"
#include "proxikey/text/tokenizer.hpp"

namespace proxikey::index {

namespace {
constexpr uint64_t kMaxTokens = uint64_t{1} << 31;
}

std::map<std::string, uint64_t> count_lemmas(std::span<const SourceDocument> docs,
                                             const text::Dictionary& dict) {
  std::map<std::string, uint64_t> counts;
  for (const auto& doc : docs) {
    for (const auto& token : text::tokenize(doc.text)) {
      if (const auto* lemmas = dict.find(token.surface)) {
        for (const auto& lemma : *lemmas) ++counts[lemma];
      } else {
        ++counts[token.surface];
      }
    }
  }
  return counts;
}

AnalyzedDocument analyze(std::string_view text, const text::Dictionary& dict,
                         const lexicon::FLList& fl) {
  const auto tokens = text::tokenize(text);
  if (tokens.size() >= kMaxTokens) {
    throw Error(fmt::format("document has {} tokens; the limit is 2^31 - 1", tokens.size()));
  }
  AnalyzedDocument out;
  out.token_count = static_cast<uint32_t>(tokens.size());
  out.occurrences.reserve(tokens.size());
  auto add = [&](std::string_view lemma, uint32_t position) {
    const auto id = fl.rank(lemma);
    if (!id) throw Error(fmt::format("lemma '{}' is missing from the lexicon", lemma));
    out.occurrences.push_back(Occurrence{position, *id});
  };
  for (const auto& token : tokens) {
    const size_t first = out.occurrences.size();
    if (const auto* lemmas = dict.find(token.surface)) {
      for (const auto& lemma : *lemmas) add(lemma, token.position);
    } else {
      add(token.surface, token.position);
    }
    std::sort(out.occurrences.begin() + static_cast<std::ptrdiff_t>(first), out.occurrences.end());
  }
  return out;
}

std::vector<Occurrence> stop_occurrences(std::span<const Occurrence> all, uint32_t sw_count) {
  std::vector<Occurrence> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](const Occurrence& o) { return o.lemma < sw_count; });
  return out;
}

}  // namespace proxikey::index
