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

#include "proxikey/search/lemma_table.hpp"

#include <algorithm>

#include "proxikey/error.hpp"

namespace proxikey::search {

LemmaTable::LemmaTable(std::span<const uint32_t> required) {
  entries_.reserve(required.size());
  for (uint32_t m : required) {
    entries_.push_back(Entry{m, 0});
    max_ += m;
  }
}

bool LemmaTable::add(uint32_t lemma) {
  Entry& e = entries_[lemma];
  if (e.count < e.max) ++count_;
  ++e.count;
  return complete();
}

void LemmaTable::remove(uint32_t lemma) {
  Entry& e = entries_[lemma];
  PROXIKEY_CHECK(e.count > 0, "lemma table count underflow");
  --e.count;
  if (e.count < e.max) --count_;
}

void LemmaTable::reset() {
  for (auto& e : entries_) e.count = 0;
  count_ = 0;
}

bool LemmaTable::consistent() const {
  uint32_t total = 0;
  uint32_t max = 0;
  for (const auto& e : entries_) {
    total += std::min(e.count, e.max);
    max += e.max;
  }
  return total == count_ && max == max_;
}

bool FragmentWindow::add(const OccurrenceRecord& rec) {
  PROXIKEY_CHECK(processed_.empty() || processed_.back().position <= rec.position,
                 "occurrences must arrive in position order");
  processed_.push_back(rec);
  return table_.add(rec.lemma);
}

uint32_t FragmentWindow::shrink() {
  PROXIKEY_CHECK(complete(), "shrink requires a complete window");
  while (table_.surplus(processed_.front().lemma)) {
    table_.remove(processed_.front().lemma);
    processed_.pop_front();
  }
  return processed_.front().position;
}

void FragmentWindow::prune(uint64_t horizon, uint32_t limit) {
  while (!processed_.empty() && horizon > processed_.front().position &&
         horizon - processed_.front().position > limit) {
    table_.remove(processed_.front().lemma);
    processed_.pop_front();
  }
}

void FragmentWindow::reset() {
  table_.reset();
  processed_.clear();
}

}  // namespace proxikey::search
