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
#include <span>

#include "proxikey/index/posting.hpp"

namespace proxikey::index {

/// Emits every three-component posting of one document.
///
/// `occurrences` holds the document's stop-lemma occurrences sorted by
/// (position, lemma). Every set of three occurrences at distinct positions
/// produces at most one posting: the lemmas are ordered by FL-number into
/// (f, s, t), the posting is anchored at the f-occurrence and exists when both
/// partners lie within `max_distance` words of the anchor. Equal lemmas are
/// disambiguated as follows:
///   - s == t: the s-occurrence is the earlier one (d1 < d2);
///   - f == s: the anchor is the earlier of the two (d1 > 0);
///   - f == s == t: 0 < d1 < d2.
///
/// Lists in the returned map are sorted.
TriPostingMap enumerate_tri_postings(DocId doc, std::span<const Occurrence> occurrences,
                                     uint32_t max_distance);

/// Same enumeration, appending into `out` (lists grow in document order when
/// documents are fed in increasing id order).
template <typename Map>
void append_tri_postings(DocId doc, std::span<const Occurrence> occurrences,
                         uint32_t max_distance, Map& out);

}  // namespace proxikey::index

#include "proxikey/index/tri_enumerator_impl.hpp"
