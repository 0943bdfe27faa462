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
#include <vector>

#include "proxikey/index/analysis.hpp"
#include "proxikey/lexicon/fl_list.hpp"

namespace proxikey::synth {

/// Synthetic corpus parameters. Word of rank r (0-based) is drawn with
/// probability proportional to 1 / (r + 1)^exponent and spelled "w<r>".
struct ZipfProfile {
  uint32_t docs = 10'000;
  uint32_t vocab = 5'000;
  double exponent = 1.0;
  uint32_t min_tokens = 50;
  uint32_t max_tokens = 150;
  uint64_t seed = 1;
};

std::string zipf_word(uint32_t rank);

/// Deterministic for a given profile. Throws std::invalid_argument for an
/// empty vocabulary or min_tokens > max_tokens.
std::vector<index::SourceDocument> generate_corpus(const ZipfProfile& profile);

struct QueryProfile {
  uint32_t count = 100;
  uint32_t min_words = 3;
  uint32_t max_words = 5;
  uint64_t seed = 2;
};

/// Samples stop-only queries from the corpus text: from a random position,
/// the next stop words in reading order, so every query has a natural match.
/// Words are space separated. Fewer queries are returned only when the corpus
/// has no run of enough stop words.
std::vector<std::string> sample_queries(const std::vector<index::SourceDocument>& docs,
                                        const lexicon::FLList& fl, uint32_t sw_count,
                                        const QueryProfile& profile);

}  // namespace proxikey::synth
