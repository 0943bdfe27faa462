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
#include <deque>
#include <optional>
#include <span>
#include <vector>

namespace proxikey::search {

/// A lemma occurrence as seen by the combiner: absolute position and local
/// lemma number.
struct OccurrenceRecord {
  uint32_t position = 0;
  uint32_t lemma = 0;

  friend auto operator<=>(const OccurrenceRecord&, const OccurrenceRecord&) = default;
};

/// Per-lemma Max/Count accounting over the current text region.
///
/// Invariant: count() == sum over lemmas of min(entry count, entry max).
class LemmaTable {
 public:
  explicit LemmaTable(std::span<const uint32_t> required);

  /// Credits one occurrence. Returns true when every lemma is satisfied.
  bool add(uint32_t lemma);
  /// Reverses one add().
  void remove(uint32_t lemma);
  void reset();

  bool complete() const { return count_ == max_; }
  /// True when dropping one occurrence of `lemma` keeps it satisfied.
  bool surplus(uint32_t lemma) const { return entries_[lemma].count > entries_[lemma].max; }

  uint32_t count() const { return count_; }
  uint32_t max() const { return max_; }
  uint32_t entry_count(uint32_t lemma) const { return entries_[lemma].count; }
  uint32_t entry_max(uint32_t lemma) const { return entries_[lemma].max; }
  size_t lemmas() const { return entries_.size(); }

  /// Recomputes the invariant from scratch.
  bool consistent() const;

 private:
  struct Entry {
    uint32_t max = 0;
    uint32_t count = 0;
  };
  std::vector<Entry> entries_;
  uint32_t max_ = 0;
  uint32_t count_ = 0;
};

/// The Processed queue together with its lemma table: a sliding window of
/// consumed occurrences that knows when it covers the whole subquery.
class FragmentWindow {
 public:
  explicit FragmentWindow(std::span<const uint32_t> required) : table_(required) {}

  /// Appends `rec` (positions must not decrease) and credits it. Returns
  /// whether the window is complete.
  bool add(const OccurrenceRecord& rec);

  /// Requires complete(). Pops front records while their lemma is surplus and
  /// returns the start position of the shortest complete suffix.
  uint32_t shrink();

  /// Drops records with `horizon - position > limit` and reverses their
  /// counts. Records that far back cannot share a fragment with anything at
  /// or after `horizon`.
  void prune(uint64_t horizon, uint32_t limit);

  void reset();

  bool complete() const { return table_.complete(); }
  const LemmaTable& table() const { return table_; }
  const std::deque<OccurrenceRecord>& processed() const { return processed_; }

 private:
  LemmaTable table_;
  std::deque<OccurrenceRecord> processed_;
};

}  // namespace proxikey::search
