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
#include <span>

#include "proxikey/index/analysis.hpp"
#include "proxikey/index/index_format.hpp"
#include "proxikey/lexicon/fl_list.hpp"
#include "proxikey/text/dictionary.hpp"

namespace proxikey::index {

struct BuildSummary {
  uint64_t documents = 0;
  uint64_t tokens = 0;
  uint64_t tri_keys = 0;
  uint64_t tri_postings = 0;
  uint64_t ordinary_postings = 0;
  uint64_t bytes = 0;
};

/// Builds all index files in memory. Document ids follow the order of `docs`.
///
/// `fl` must rank every lemma the corpus produces. The output depends only on
/// the inputs, so rebuilding yields identical bytes. Throws proxikey::Error on
/// an empty corpus.
IndexFiles build_index_files(std::span<const SourceDocument> docs, const text::Dictionary& dict,
                             const lexicon::FLList& fl, const lexicon::LexiconConfig& cfg,
                             BuildSummary* summary = nullptr);

/// build_index_files() followed by IndexFiles::write(dir).
BuildSummary build_index(std::span<const SourceDocument> docs, const text::Dictionary& dict,
                         const lexicon::FLList& fl, const lexicon::LexiconConfig& cfg,
                         const std::filesystem::path& dir);

}  // namespace proxikey::index
