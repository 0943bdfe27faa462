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

#include <span>
#include <vector>

#include "proxikey/index/index_reader.hpp"
#include "proxikey/search/combiner.hpp"
#include "proxikey/search/query_plan.hpp"

namespace proxikey::index {

/// Evaluates a subquery from the ordinary positional lists alone.
///
/// Lists of the subquery's lemmas are merged document-at-a-time. In each
/// document holding all of them, the key co-occurrence rule is re-derived
/// from raw positions to find which occurrences the plan's keys would expose,
/// and minimal windows of at most 2 * MaxDistance words are reported. The
/// fragment set therefore matches the three-component path exactly; only the
/// amount of posting data read differs.
search::SubqueryResult baseline_search_subquery(const search::QueryPlan& plan, const Index& index);

/// Baseline evaluation of one subquery given as lemmas in query order. A
/// single lemma has no keys: every occurrence is a zero-length fragment.
/// Lemma ids outside the lexicon yield no fragments.
search::SubqueryResult baseline_search(std::span<const LemmaId> lemmas, const Index& index);

/// Minimal windows over sorted, duplicate-free (position, local lemma)
/// records: [s, e] holds every lemma with its required multiplicity while
/// neither [s+1, e] nor [s, e-1] does, and e - s <= max_span.
std::vector<search::Fragment> minimal_windows(DocId doc,
                                              std::span<const search::OccurrenceRecord> records,
                                              std::span<const uint32_t> required,
                                              uint32_t max_span);

}  // namespace proxikey::index
