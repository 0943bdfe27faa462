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

#include "proxikey/search/combiner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::search {

std::optional<DocId> align_documents(std::span<TriPostingIterator* const> iterators) {
  PROXIKEY_CHECK(!iterators.empty(), "step 1 needs at least one iterator");
  auto later = [](const TriPostingIterator* a, const TriPostingIterator* b) {
    return a->value().doc > b->value().doc;
  };
  std::priority_queue<TriPostingIterator*, std::vector<TriPostingIterator*>, decltype(later)> heap(
      later);
  DocId max_doc = 0;
  for (auto* it : iterators) {
    if (it->exhausted()) return std::nullopt;
    max_doc = std::max(max_doc, it->value().doc);
    heap.push(it);
  }
  while (heap.top()->value().doc != max_doc) {
    TriPostingIterator* lowest = heap.top();
    heap.pop();
    lowest->next();
    if (lowest->exhausted()) return std::nullopt;
    max_doc = std::max(max_doc, lowest->value().doc);
    heap.push(lowest);
  }
  return max_doc;
}

Alignment align_positions(std::span<TriPostingIterator* const> iterators, DocId doc,
                          uint32_t max_distance) {
  auto later = [](const TriPostingIterator* a, const TriPostingIterator* b) {
    return a->value().pos > b->value().pos;
  };
  std::priority_queue<TriPostingIterator*, std::vector<TriPostingIterator*>, decltype(later)> heap(
      later);
  uint32_t max_pos = 0;
  for (auto* it : iterators) {
    PROXIKEY_CHECK(!it->exhausted() && it->value().doc == doc, "step 2 needs aligned iterators");
    max_pos = std::max(max_pos, it->value().pos);
    heap.push(it);
  }
  const uint32_t gate = anchor_gate(max_distance);
  while (max_pos - heap.top()->value().pos > gate) {
    TriPostingIterator* lowest = heap.top();
    heap.pop();
    lowest->next();
    if (lowest->exhausted() || lowest->value().doc != doc) return Alignment::kDocExhausted;
    max_pos = std::max(max_pos, lowest->value().pos);
    heap.push(lowest);
  }
  return Alignment::kWindow;
}

Combiner::Combiner(const QueryPlan& plan, uint32_t max_distance, CombinerOptions options)
    : plan_(plan),
      max_distance_(max_distance),
      options_(std::move(options)),
      pending_first_start_(options_.first_start),
      table_(std::clamp<uint32_t>(options_.window_size, 1, PositionTable::kMaxWindow)),
      window_(plan.required) {
  if (max_distance == 0) throw std::invalid_argument("MaxDistance must be at least 1");
  if (options_.window_size < 2 * max_distance || options_.window_size > PositionTable::kMaxWindow) {
    throw std::invalid_argument(fmt::format("WindowSize {} outside [{}, 64]", options_.window_size,
                                            2 * max_distance));
  }
  if (options_.trace && !options_.names) {
    throw std::invalid_argument("tracing needs the lexicon for lemma names");
  }
  for (const auto& key : plan_.keys) {
    std::array<int, 3> feed{};
    for (size_t c = 0; c < 3; ++c) {
      const auto& component = key.components[c];
      feed[c] = component.starred ? -1 : static_cast<int>(*plan_.local_of(component.lemma));
    }
    feed_.push_back(feed);
  }
}

void Combiner::trace(const std::string& line) const {
  if (options_.trace) options_.trace(line);
}

bool Combiner::any_in(DocId doc) const {
  return std::any_of(iterators_.begin(), iterators_.end(), [&](const TriPostingIterator& it) {
    return !it.exhausted() && it.value().doc == doc;
  });
}

SubqueryResult Combiner::run(std::vector<TriPostingIterator> iterators) {
  PROXIKEY_CHECK(iterators.size() == plan_.keys.size(), "one iterator per plan key");
  iterators_ = std::move(iterators);
  out_.clear();
  std::vector<TriPostingIterator*> handles;
  for (auto& it : iterators_) handles.push_back(&it);

  while (const auto doc = align_documents(handles)) {
    if (align_positions(handles, *doc, max_distance_) == Alignment::kWindow) {
      process_document(*doc);
    }
  }

  SubqueryResult result;
  result.fragments = std::move(out_);
  for (const auto& it : iterators_) result.postings_read += it.postings_read();
  return result;
}

void Combiner::process_document(DocId doc) {
  uint32_t min_pos = UINT32_MAX;
  for (const auto& it : iterators_) min_pos = std::min(min_pos, it.value().pos);
  uint32_t start = min_pos - std::min(min_pos, max_distance_);
  if (pending_first_start_) {
    if (*pending_first_start_ > start) {
      throw std::invalid_argument(
          fmt::format("first window start {} lies after the computed start {}",
                      *pending_first_start_, start));
    }
    start = *pending_first_start_;
    pending_first_start_.reset();
  }
  table_.shift(start);
  window_.reset();
  last_start_.reset();
  trace(fmt::format("Shift Start={}", start));

  const uint32_t limit = 2 * max_distance_;
  while (true) {
    fill(doc);
    table_.drain_first(source_);
    trace("Populate Source");
    consume(doc);
    table_.rotate();
    window_.prune(table_.start(), limit);
    trace(fmt::format("Buffer switch, Start={}", table_.start()));

    if (!table_.empty()) continue;
    if (!any_in(doc)) break;
    // Nothing buffered: jump to where the next posting's occurrences can begin.
    uint32_t next_pos = UINT32_MAX;
    for (const auto& it : iterators_) {
      if (!it.exhausted() && it.value().doc == doc) next_pos = std::min(next_pos, it.value().pos);
    }
    if (next_pos - std::min(next_pos, max_distance_) > table_.start()) {
      const uint32_t jump = next_pos - max_distance_;
      table_.shift(jump);
      window_.prune(jump, limit);
      trace(fmt::format("Shift Start={}", jump));
    }
  }
}

void Combiner::fill(DocId doc) {
  for (size_t k = 0; k < iterators_.size(); ++k) {
    auto& it = iterators_[k];
    const auto& key = plan_.keys[k];
    while (!it.exhausted() && it.value().doc == doc && it.value().pos < table_.flush_border()) {
      const auto& p = it.value();
      const std::array<uint32_t, 3> positions = {p.pos, static_cast<uint32_t>(int64_t{p.pos} + p.d1),
                                                 static_cast<uint32_t>(int64_t{p.pos} + p.d2)};
      if (options_.trace) {
        trace(fmt::format("Read posting ({}, {}, {}) key {}", positions[0], positions[1],
                          positions[2], format_plan_key(key, *options_.names)));
      }
      for (size_t c = 0; c < 3; ++c) {
        if (feed_[k][c] < 0) continue;
        const uint32_t buffer = table_.set(positions[c], static_cast<uint32_t>(feed_[k][c]));
        if (options_.trace) {
          trace(fmt::format("Set (position {}, key {}), buffer {}", positions[c],
                            options_.names->lemma(key.components[c].lemma), buffer));
        }
      }
      it.next();
    }
  }
}

void Combiner::consume(DocId doc) {
  const uint32_t limit = 2 * max_distance_;
  for (size_t i = 0; i < source_.size(); ++i) {
    const OccurrenceRecord rec = source_[i];
    const bool complete = window_.add(rec);
    if (options_.trace) {
      const auto& name = options_.names->lemma(plan_.local_lemmas[rec.lemma]);
      trace(fmt::format("Fetch (position {}, key {})", rec.position, name));
      trace(fmt::format("Add (key {}) Count{}Max", name, complete ? "=" : "!="));
    }
    // All lemmas at one position are credited before the window is judged.
    if (i + 1 < source_.size() && source_[i + 1].position == rec.position) continue;
    if (!complete) continue;
    const uint32_t start = window_.shrink();
    if (last_start_ == start) continue;
    last_start_ = start;
    if (rec.position - start <= limit) {
      out_.push_back(Fragment{doc, start, rec.position});
      trace(fmt::format("Result (from {}, to {})", start, rec.position));
    }
  }
}

SubqueryResult search_subquery(const QueryPlan& plan, const index::Index& index,
                               const CombinerOptions& options) {
  std::vector<TriPostingIterator> iterators;
  iterators.reserve(plan.keys.size());
  for (const auto& key : plan.keys) iterators.push_back(index.open_tri(key.key));
  CombinerOptions opts = options;
  if (opts.trace && !opts.names) opts.names = &index.lexicon();
  Combiner combiner(plan, index.meta().max_distance, std::move(opts));
  return combiner.run(std::move(iterators));
}

}  // namespace proxikey::search
