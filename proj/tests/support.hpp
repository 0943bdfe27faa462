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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "proxikey/index/analysis.hpp"
#include "proxikey/index/index_builder.hpp"
#include "proxikey/index/index_reader.hpp"
#include "proxikey/lexicon/fl_list.hpp"
#include "proxikey/text/dictionary.hpp"

namespace proxikey::testing {

/// The two short documents used throughout the index examples.
std::vector<index::SourceDocument> two_documents();
/// are -> are, be; is -> be; has -> have.
text::Dictionary two_documents_dictionary();
/// Frequency overrides that give be < have < you < are < who in FL order.
std::map<std::string, uint64_t> two_documents_counts();

/// The trace example text, padded with one leading word so that 0-based
/// positions equal the 1-based numbering of the original narration.
std::vector<index::SourceDocument> trace_document();
/// i < you < need < who in FL order.
std::map<std::string, uint64_t> trace_counts();

/// An index built in memory together with its inputs.
struct Built {
  std::vector<index::SourceDocument> docs;
  text::Dictionary dict;
  lexicon::FLList fl;
  lexicon::LexiconConfig cfg;
  index::IndexFiles files;
  std::unique_ptr<index::Index> index;

  /// Stop occurrences per document, as the oracle consumes them.
  std::vector<std::vector<index::Occurrence>> stop_occurrences() const;
};

/// Corpus counts with `overrides` applied on top.
Built build(std::vector<index::SourceDocument> docs, text::Dictionary dict,
            const std::map<std::string, uint64_t>& overrides, lexicon::LexiconConfig cfg);

Built build_two_documents(uint32_t max_distance = 5);
Built build_trace_document();

lexicon::LemmaId id(const Built& b, const std::string& lemma);

/// `n` distinct valid postings in list order: 1 <= |D| <= max_distance,
/// D1 != D2.
std::vector<index::Posting> random_postings(size_t n, uint64_t seed, uint32_t max_distance = 7);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace proxikey::testing
