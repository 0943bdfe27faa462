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

#include "proxikey/oracle/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace proxikey::oracle {
namespace {

struct Canonical {
  index::TriKey key;
  uint32_t anchor = 0;
  int32_t d1 = 0;
  int32_t d2 = 0;
};

int64_t distance(uint32_t a, uint32_t b) { return int64_t{b} - int64_t{a}; }

// Calls emit(canonical) for each triple of occurrences at distinct positions
// whose partners lie within max_distance of the anchor.
template <typename Emit>
void for_each_triple(std::span<const Occurrence> occ, uint32_t max_distance, Emit&& emit) {
  const int64_t reach = 2 * int64_t{max_distance};
  for (size_t i = 0; i < occ.size(); ++i) {
    for (size_t j = i + 1; j < occ.size() && distance(occ[i].position, occ[j].position) <= reach;
         ++j) {
      for (size_t k = j + 1;
           k < occ.size() && distance(occ[i].position, occ[k].position) <= reach; ++k) {
        std::array<Occurrence, 3> t = {occ[i], occ[j], occ[k]};
        if (t[0].position == t[1].position || t[1].position == t[2].position ||
            t[0].position == t[2].position) {
          continue;
        }
        std::sort(t.begin(), t.end(), [](const Occurrence& a, const Occurrence& b) {
          return a.lemma != b.lemma ? a.lemma < b.lemma : a.position < b.position;
        });
        const int64_t d1 = distance(t[0].position, t[1].position);
        const int64_t d2 = distance(t[0].position, t[2].position);
        if (std::abs(d1) > max_distance || std::abs(d2) > max_distance) continue;
        emit(Canonical{{t[0].lemma, t[1].lemma, t[2].lemma},
                       t[0].position,
                       static_cast<int32_t>(d1),
                       static_cast<int32_t>(d2)});
      }
    }
  }
}

bool complete(const std::vector<std::vector<uint32_t>>& prefix, size_t from, size_t to,
              std::span<const uint32_t> required) {
  for (size_t l = 0; l < required.size(); ++l) {
    if (prefix[to][l] - prefix[from][l] < required[l]) return false;
  }
  return true;
}

}  // namespace

index::TriPostingMap tri_postings(std::span<const std::vector<Occurrence>> docs,
                                  uint32_t max_distance) {
  std::map<index::TriKey, std::set<index::Posting>> found;
  for (size_t d = 0; d < docs.size(); ++d) {
    for_each_triple(docs[d], max_distance, [&](const Canonical& c) {
      found[c.key].insert(index::Posting{static_cast<DocId>(d), c.anchor, c.d1, c.d2});
    });
  }
  index::TriPostingMap out;
  for (const auto& [key, postings] : found) out[key].assign(postings.begin(), postings.end());
  return out;
}

std::vector<OccurrenceRecord> visible_occurrences(std::span<const Occurrence> doc,
                                                  const search::QueryPlan& plan,
                                                  uint32_t max_distance) {
  std::set<OccurrenceRecord> visible;
  for_each_triple(doc, max_distance, [&](const Canonical& c) {
    for (const auto& key : plan.keys) {
      if (key.key != c.key) continue;
      const std::array<int64_t, 3> positions = {c.anchor, int64_t{c.anchor} + c.d1,
                                                int64_t{c.anchor} + c.d2};
      for (size_t i = 0; i < 3; ++i) {
        if (key.components[i].starred) continue;
        visible.insert(OccurrenceRecord{static_cast<uint32_t>(positions[i]),
                                        *plan.local_of(key.components[i].lemma)});
      }
    }
  });
  return {visible.begin(), visible.end()};
}

std::vector<Fragment> fragments(DocId doc, std::span<const OccurrenceRecord> visible,
                                std::span<const uint32_t> required, uint32_t max_distance) {
  std::vector<uint32_t> positions;
  for (const auto& r : visible) positions.push_back(r.position);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  // prefix[i][l]: occurrences of lemma l at positions[0..i).
  std::vector<std::vector<uint32_t>> prefix(positions.size() + 1,
                                            std::vector<uint32_t>(required.size(), 0));
  for (size_t i = 0; i < positions.size(); ++i) {
    prefix[i + 1] = prefix[i];
    for (const auto& r : visible) {
      if (r.position == positions[i]) ++prefix[i + 1][r.lemma];
    }
  }

  std::vector<Fragment> out;
  for (size_t a = 0; a < positions.size(); ++a) {
    for (size_t b = a; b < positions.size(); ++b) {
      if (positions[b] - positions[a] > 2 * max_distance) break;
      if (!complete(prefix, a, b + 1, required)) continue;
      if (complete(prefix, a + 1, b + 1, required)) continue;
      if (complete(prefix, a, b, required)) continue;
      out.push_back(Fragment{doc, positions[a], positions[b]});
    }
  }
  return out;
}

std::vector<Fragment> search(const search::QueryPlan& plan,
                             std::span<const std::vector<Occurrence>> docs,
                             uint32_t max_distance) {
  std::vector<Fragment> out;
  for (size_t d = 0; d < docs.size(); ++d) {
    std::vector<Occurrence> relevant;
    for (const auto& o : docs[d]) {
      if (plan.local_of(o.lemma)) relevant.push_back(o);
    }
    const auto visible = visible_occurrences(relevant, plan, max_distance);
    const auto found = fragments(static_cast<DocId>(d), visible, plan.required, max_distance);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

}  // namespace proxikey::oracle
