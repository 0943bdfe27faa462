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

#include <algorithm>
#include <vector>

namespace proxikey::index {

namespace detail {

template <typename Emit>
void for_each_tri_posting(std::span<const Occurrence> occ, uint32_t max_distance, Emit&& emit) {
  std::vector<Occurrence> partners;
  size_t lo = 0;
  for (size_t a = 0; a < occ.size(); ++a) {
    const Occurrence anchor = occ[a];
    const uint32_t from = anchor.position >= max_distance ? anchor.position - max_distance : 0;
    while (occ[lo].position < from) ++lo;

    partners.clear();
    for (size_t i = lo; i < occ.size() && occ[i].position <= anchor.position + max_distance; ++i) {
      const Occurrence& o = occ[i];
      if (o.position == anchor.position || o.lemma < anchor.lemma) continue;
      // A second occurrence of the anchor lemma must come later in the text.
      if (o.lemma == anchor.lemma && o.position < anchor.position) continue;
      partners.push_back(o);
    }
    // Ordered by (lemma, position): the first of any pair is the s-component.
    std::sort(partners.begin(), partners.end(), [](const Occurrence& x, const Occurrence& y) {
      return x.lemma != y.lemma ? x.lemma < y.lemma : x.position < y.position;
    });
    for (size_t i = 0; i < partners.size(); ++i) {
      for (size_t j = i + 1; j < partners.size(); ++j) {
        const Occurrence& s = partners[i];
        const Occurrence& t = partners[j];
        if (s.position == t.position) continue;
        emit(TriKey{anchor.lemma, s.lemma, t.lemma}, anchor.position,
             static_cast<int32_t>(s.position) - static_cast<int32_t>(anchor.position),
             static_cast<int32_t>(t.position) - static_cast<int32_t>(anchor.position));
      }
    }
  }
}

}  // namespace detail

template <typename Map>
void append_tri_postings(DocId doc, std::span<const Occurrence> occurrences,
                         uint32_t max_distance, Map& out) {
  // Collect this document's records per key first so each list stays sorted
  // even though anchors with equal positions but different lemmas interleave.
  std::vector<std::pair<TriKey, Posting>> records;
  detail::for_each_tri_posting(occurrences, max_distance,
                               [&](const TriKey& key, uint32_t pos, int32_t d1, int32_t d2) {
                                 records.emplace_back(key, Posting{doc, pos, d1, d2});
                               });
  std::sort(records.begin(), records.end());
  for (const auto& [key, posting] : records) out[key].push_back(posting);
}

}  // namespace proxikey::index
