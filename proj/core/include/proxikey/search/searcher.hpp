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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxikey/index/index_reader.hpp"
#include "proxikey/search/combiner.hpp"
#include "proxikey/text/dictionary.hpp"

namespace proxikey::search {

/// Sum over fragments of 1 / (1 + span)^2.
double proximity_score(std::span<const Fragment> fragments);

using Scorer = std::function<double(std::span<const Fragment>)>;

enum class Strategy {
  kCombiner,  // three-component key lists
  kBaseline,  // ordinary positional lists
};

struct SearchOptions {
  Strategy strategy = Strategy::kCombiner;
  CombinerOptions combiner;
  Scorer scorer = proximity_score;
};

struct DocResult {
  DocId doc = 0;
  double score = 0.0;
  std::vector<Fragment> fragments;  // sorted by (start, end), no duplicates
};

struct SearchResult {
  std::vector<DocResult> documents;  // descending score, then ascending doc id
  uint64_t postings_read = 0;
  size_t subqueries = 0;
};

/// Full pipeline: tokenize, expand subqueries, plan and evaluate each, merge
/// fragments per document, score and rank.
///
/// Throws UnsupportedQuery for queries outside the stop-only class.
SearchResult search(std::string_view query, const index::Index& index,
                    const text::Dictionary& dict, const SearchOptions& options = {});

/// Groups fragments (any order, duplicates allowed) into ranked documents.
std::vector<DocResult> rank_fragments(std::vector<Fragment> fragments, const Scorer& scorer);

}  // namespace proxikey::search
