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

#include "proxikey/index/baseline.hpp"

#include <algorithm>

#include "proxikey/index/tri_enumerator.hpp"

namespace proxikey::index {

using search::Fragment;
using search::OccurrenceRecord;

std::vector<Fragment> minimal_windows(DocId doc, std::span<const OccurrenceRecord> records,
                                      std::span<const uint32_t> required, uint32_t max_span) {
  std::vector<Fragment> out;
  std::vector<uint32_t> have(required.size(), 0);
  size_t missing = 0;
  for (uint32_t r : required) missing += r;
  auto add = [&](uint32_t lemma) {
    if (have[lemma]++ < required[lemma]) --missing;
  };
  auto drop = [&](uint32_t lemma) {
    if (--have[lemma] < required[lemma]) ++missing;
  };

  size_t left = 0;
  std::optional<uint32_t> previous_start;
  size_t right = 0;
  while (right < records.size()) {
    const uint32_t end = records[right].position;
    while (right < records.size() && records[right].position == end) add(records[right++].lemma);
    if (missing != 0) continue;
    // Drop whole leading positions while the window stays complete.
    while (true) {
      size_t next = left;
      const uint32_t pos = records[left].position;
      while (next < right && records[next].position == pos) drop(records[next++].lemma);
      if (missing == 0) {
        left = next;
        continue;
      }
      for (size_t i = left; i < next; ++i) add(records[i].lemma);
      break;
    }
    const uint32_t start = records[left].position;
    if (previous_start != start && end - start <= max_span) out.push_back(Fragment{doc, start, end});
    previous_start = start;
  }
  return out;
}

search::SubqueryResult baseline_search_subquery(const search::QueryPlan& plan, const Index& index) {
  const uint32_t max_distance = index.meta().max_distance;
  search::SubqueryResult result;

  std::vector<OrdinaryPostingIterator> lists;
  for (LemmaId lemma : plan.local_lemmas) lists.push_back(index.open_ordinary(lemma));

  auto all_alive = [&] {
    return std::none_of(lists.begin(), lists.end(), [](const auto& it) { return it.exhausted(); });
  };

  std::vector<Occurrence> occurrences;
  std::vector<Occurrence> key_occurrences;
  std::vector<OccurrenceRecord> visible;
  while (!lists.empty() && all_alive()) {
    DocId doc = 0;
    for (const auto& it : lists) doc = std::max(doc, it.value().doc);
    bool aligned = true;
    for (auto& it : lists) {
      while (!it.exhausted() && it.value().doc < doc) it.next();
      if (it.exhausted()) {
        aligned = false;
        break;
      }
      if (it.value().doc != doc) aligned = false;
    }
    if (!aligned) continue;

    occurrences.clear();
    for (auto& it : lists) {
      while (!it.exhausted() && it.value().doc == doc) {
        occurrences.push_back(Occurrence{it.value().pos, it.lemma()});
        it.next();
      }
    }
    std::sort(occurrences.begin(), occurrences.end());

    visible.clear();
    for (const auto& key : plan.keys) {
      key_occurrences.clear();
      std::copy_if(occurrences.begin(), occurrences.end(), std::back_inserter(key_occurrences),
                   [&](const Occurrence& o) {
                     return o.lemma == key.key.f || o.lemma == key.key.s || o.lemma == key.key.t;
                   });
      detail::for_each_tri_posting(
          key_occurrences, max_distance,
          [&](const TriKey& found, uint32_t pos, int32_t d1, int32_t d2) {
            if (found != key.key) return;
            const int64_t positions[3] = {pos, int64_t{pos} + d1, int64_t{pos} + d2};
            for (size_t c = 0; c < 3; ++c) {
              if (key.components[c].starred) continue;
              visible.push_back(OccurrenceRecord{static_cast<uint32_t>(positions[c]),
                                                 *plan.local_of(key.components[c].lemma)});
            }
          });
    }
    std::sort(visible.begin(), visible.end());
    visible.erase(std::unique(visible.begin(), visible.end()), visible.end());

    const auto found = minimal_windows(doc, visible, plan.required, 2 * max_distance);
    result.fragments.insert(result.fragments.end(), found.begin(), found.end());
  }

  for (const auto& it : lists) result.postings_read += it.postings_read();
  return result;
}

search::SubqueryResult baseline_search(std::span<const LemmaId> lemmas, const Index& index) {
  search::SubqueryResult result;
  if (lemmas.empty()) return result;
  for (LemmaId lemma : lemmas) {
    if (lemma >= index.lexicon().size()) return result;
  }
  if (lemmas.size() > 1) {
    const auto plan = search::select_keys(search::Subquery{{lemmas.begin(), lemmas.end()}});
    return baseline_search_subquery(plan, index);
  }
  for (auto it = index.open_ordinary(lemmas[0]); !it.exhausted(); it.next()) {
    result.fragments.push_back(search::Fragment{it.value().doc, it.value().pos, it.value().pos});
    result.postings_read = it.postings_read();
  }
  return result;
}

}  // namespace proxikey::index
