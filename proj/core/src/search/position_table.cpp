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

#include "proxikey/search/position_table.hpp"

#include <bit>

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::search {

PositionTable::PositionTable(uint32_t window_size) : window_(window_size) {
  PROXIKEY_CHECK(window_size >= 1 && window_size <= kMaxWindow,
                 fmt::format("window size {} outside [1, 64]", window_size));
}

void PositionTable::shift(uint32_t start) {
  for (auto& b : buffers_) b.mask = 0;
  first_ = 0;
  start_ = start;
}

uint32_t PositionTable::set(uint32_t position, uint32_t lemma) {
  PROXIKEY_CHECK(position >= start_ && position - start_ < 3 * window_,
                 fmt::format("position {} outside the table [{}, {})", position, start_,
                             uint64_t{start_} + 3 * window_));
  const uint32_t relative = position - start_;
  const uint32_t logical = relative / window_;
  const uint32_t slot = relative % window_;
  Buffer& b = buffer(logical);
  const uint64_t bit = uint64_t{1} << slot;
  if ((b.mask & bit) == 0) {
    b.mask |= bit;
    b.entries[slot] = Entry{position, 0};
  }
  b.entries[slot].lemmas |= uint64_t{1} << lemma;
  return logical;
}

void PositionTable::drain_first(std::vector<OccurrenceRecord>& source) {
  source.clear();
  Buffer& b = buffer(0);
  uint64_t mask = b.mask;
  while (mask != 0) {
    const int slot = std::countr_zero(mask);
    mask &= mask - 1;
    uint64_t lemmas = b.entries[slot].lemmas;
    while (lemmas != 0) {
      const int lemma = std::countr_zero(lemmas);
      lemmas &= lemmas - 1;
      source.push_back(OccurrenceRecord{b.entries[slot].position, static_cast<uint32_t>(lemma)});
    }
  }
  b.mask = 0;
}

void PositionTable::rotate() {
  PROXIKEY_CHECK(buffer(0).mask == 0, "rotate requires a drained first buffer");
  first_ = (first_ + 1) % 3;
  start_ += window_;
}

bool PositionTable::empty() const {
  return buffers_[0].mask == 0 && buffers_[1].mask == 0 && buffers_[2].mask == 0;
}

}  // namespace proxikey::search
