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
#include <vector>

#include "proxikey/index/index_format.hpp"
#include "proxikey/index/posting_iterator.hpp"
#include "proxikey/lexicon/fl_list.hpp"

namespace proxikey::index {

/// A persisted index loaded into memory. Immutable; any number of threads may
/// open iterators concurrently. Iterators borrow from the Index and must not
/// outlive it.
class Index {
 public:
  /// Reads and validates every file (magic, version, checksum, catalog order).
  static Index open(const std::filesystem::path& dir);
  static Index from_files(IndexFiles files);

  const IndexMeta& meta() const { return meta_; }
  const lexicon::FLList& lexicon() const { return lexicon_; }
  const IndexFiles& files() const { return files_; }

  std::span<const CatalogEntry> catalog() const { return catalog_; }
  /// nullptr when the key has no postings.
  const CatalogEntry* find(const TriKey& key) const;
  TriPostingIterator open_tri(const TriKey& key) const;

  std::span<const OrdinaryEntry> ordinary_directory() const { return ordinary_; }
  OrdinaryPostingIterator open_ordinary(LemmaId lemma) const;

 private:
  Index() = default;

  IndexFiles files_;
  IndexMeta meta_;
  lexicon::FLList lexicon_;
  std::vector<CatalogEntry> catalog_;
  std::vector<OrdinaryEntry> ordinary_;
};

/// Per-document occurrences of lemmas ranked below `limit`, rebuilt from the
/// ordinary lists and sorted by (position, lemma).
std::vector<std::vector<Occurrence>> document_occurrences(const Index& index,
                                                          LemmaId limit = UINT32_MAX);

}  // namespace proxikey::index
