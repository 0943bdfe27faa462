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

#include <array>
#include <cstdint>
#include <vector>

#include "proxikey/search/lemma_table.hpp"

namespace proxikey::search {

/// Three cyclic buffers of `window_size` slots that sort occurrences by
/// position without comparisons.
///
/// Buffer b covers positions [start + b*W, start + (b+1)*W). Each buffer keeps
/// a 64-bit occupancy mask; slot i of buffer b, when occupied, holds position
/// start + b*W + i and a bit set over local lemma numbers (a position can
/// carry several subquery lemmas).
class PositionTable {
 public:
  static constexpr uint32_t kMaxWindow = 64;

  /// Requires 1 <= window_size <= 64. The engine additionally requires
  /// window_size >= 2 * MaxDistance.
  explicit PositionTable(uint32_t window_size);

  /// Clears every buffer and moves the origin to `start`.
  void shift(uint32_t start);

  /// Records `lemma` at `position` and returns the logical buffer index.
  /// Aborts unless start <= position < start + 3W.
  uint32_t set(uint32_t position, uint32_t lemma);

  /// Moves the first buffer's records into `source` (cleared first), sorted
  /// by position then lemma, and empties that buffer.
  void drain_first(std::vector<OccurrenceRecord>& source);

  /// Renumbers buffers cyclically (first -> third, second -> first,
  /// third -> second) and advances start by W. Requires the first buffer to
  /// be drained.
  void rotate();

  uint32_t start() const { return start_; }
  uint32_t window_size() const { return window_; }
  /// start + 1.5 W (integer arithmetic).
  uint64_t flush_border() const { return uint64_t{start_} + (3 * uint64_t{window_}) / 2; }

  bool empty() const;
  uint64_t mask(uint32_t logical_buffer) const { return buffer(logical_buffer).mask; }

 private:
  struct Entry {
    uint32_t position = 0;
    uint64_t lemmas = 0;
  };
  struct Buffer {
    std::array<Entry, kMaxWindow> entries{};
    uint64_t mask = 0;
  };

  Buffer& buffer(uint32_t logical) { return buffers_[(first_ + logical) % 3]; }
  const Buffer& buffer(uint32_t logical) const { return buffers_[(first_ + logical) % 3]; }

  std::array<Buffer, 3> buffers_{};
  uint32_t first_ = 0;
  uint32_t window_;
  uint32_t start_ = 0;
};

}  // namespace proxikey::search
