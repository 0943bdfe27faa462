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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxikey/index/index_reader.hpp"
#include "proxikey/index/posting_iterator.hpp"
#include "proxikey/lexicon/fl_list.hpp"
#include "proxikey/search/lemma_table.hpp"
#include "proxikey/search/position_table.hpp"
#include "proxikey/search/query_plan.hpp"

namespace proxikey::search {

using index::DocId;
using index::TriPostingIterator;

/// A minimal text window [start, end] (inclusive word positions).
struct Fragment {
  DocId doc = 0;
  uint32_t start = 0;
  uint32_t end = 0;

  uint32_t span() const { return end - start; }
  friend auto operator<=>(const Fragment&, const Fragment&) = default;
};

using TraceSink = std::function<void(const std::string&)>;

struct CombinerOptions {
  uint32_t window_size = 64;
  /// Replaces the computed origin of the first Step-3 window. It may only
  /// move the origin earlier.
  std::optional<uint32_t> first_start;
  /// Receives one line per event when set; `names` must then be non-null.
  TraceSink trace;
  const lexicon::FLList* names = nullptr;
};

struct SubqueryResult {
  std::vector<Fragment> fragments;
  uint64_t postings_read = 0;
};

/// Step 1: advances the iterators with the smallest document id until all
/// agree. Returns that id, or nullopt once any iterator runs out.
std::optional<DocId> align_documents(std::span<TriPostingIterator* const> iterators);

enum class Alignment { kWindow, kDocExhausted };

/// Largest anchor spread that Step 2 hands to Step 3.
///
/// A fragment spans at most 2M words and every key contributes an occurrence
/// inside it, each at most M words from its posting's anchor, so the anchors
/// of a fragment's postings lie within 4M of each other.
constexpr uint32_t anchor_gate(uint32_t max_distance) { return 4 * max_distance; }

/// Step 2: within `doc`, advances the iterator with the smallest position
/// until the spread of current positions is at most anchor_gate(M), or some
/// iterator leaves the document.
Alignment align_positions(std::span<TriPostingIterator* const> iterators, DocId doc,
                          uint32_t max_distance);

/// Evaluates one subquery over its key iterators (document-at-a-time).
class Combiner {
 public:
  /// Throws std::invalid_argument unless 2M <= window_size <= 64.
  Combiner(const QueryPlan& plan, uint32_t max_distance, CombinerOptions options = {});

  /// `iterators[i]` must iterate plan.keys[i].key.
  SubqueryResult run(std::vector<TriPostingIterator> iterators);

 private:
  void process_document(DocId doc);
  void fill(DocId doc);
  void consume(DocId doc);
  bool any_in(DocId doc) const;
  void trace(const std::string& line) const;

  const QueryPlan& plan_;
  uint32_t max_distance_;
  CombinerOptions options_;
  std::optional<uint32_t> pending_first_start_;
  // Local lemma number per physical component; -1 for starred components.
  std::vector<std::array<int, 3>> feed_;

  std::vector<TriPostingIterator> iterators_;
  PositionTable table_;
  FragmentWindow window_;
  std::vector<OccurrenceRecord> source_;
  std::optional<uint32_t> last_start_;
  std::vector<Fragment> out_;
};

/// Opens one iterator per plan key and runs the combiner. MaxDistance comes
/// from the index.
SubqueryResult search_subquery(const QueryPlan& plan, const index::Index& index,
                               const CombinerOptions& options = {});

}  // namespace proxikey::search
