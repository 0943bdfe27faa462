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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxikey/index/posting.hpp"
#include "proxikey/lexicon/fl_list.hpp"
#include "proxikey/text/dictionary.hpp"

namespace proxikey::index {

struct SourceDocument {
  std::string name;
  std::string text;
};

/// A document reduced to lemma occurrences, sorted by (position, lemma).
struct AnalyzedDocument {
  uint32_t token_count = 0;
  std::vector<Occurrence> occurrences;
};

/// Per-lemma token occurrence counts; a word with several lemmas counts once
/// for each of them.
std::map<std::string, uint64_t> count_lemmas(std::span<const SourceDocument> docs,
                                             const text::Dictionary& dict);

/// Throws proxikey::Error if a lemma is missing from `fl` or the document has
/// 2^31 tokens or more.
AnalyzedDocument analyze(std::string_view text, const text::Dictionary& dict,
                         const lexicon::FLList& fl);

/// Occurrences of lemmas whose FL-number is below `sw_count`.
std::vector<Occurrence> stop_occurrences(std::span<const Occurrence> all, uint32_t sw_count);

}  // namespace proxikey::index
