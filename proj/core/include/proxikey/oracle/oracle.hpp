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
#include <vector>

#include "proxikey/index/posting.hpp"
#include "proxikey/search/combiner.hpp"
#include "proxikey/search/lemma_table.hpp"
#include "proxikey/search/query_plan.hpp"

// Brute-force reference implementations. They share data types with the
// engine but none of its algorithms, and favour obviousness over speed.
namespace proxikey::oracle {

using index::DocId;
using index::Occurrence;
using search::Fragment;
using search::OccurrenceRecord;

/// Every three-component posting of every document, found by testing all
/// occurrence triples. docs[i] holds document i's stop occurrences sorted by
/// (position, lemma).
index::TriPostingMap tri_postings(std::span<const std::vector<Occurrence>> docs,
                                  uint32_t max_distance);

/// Occurrences (local lemma numbering) that the plan's keys expose in one
/// document: each non-starred component of each posting of each plan key.
std::vector<OccurrenceRecord> visible_occurrences(std::span<const Occurrence> doc,
                                                  const search::QueryPlan& plan,
                                                  uint32_t max_distance);

/// Windows [s, e] over positions of `visible` that hold every lemma with its
/// multiplicity, such that neither trimming the first nor the last position
/// keeps them complete, and e - s <= 2 * max_distance. Sorted by start.
std::vector<Fragment> fragments(DocId doc, std::span<const OccurrenceRecord> visible,
                                std::span<const uint32_t> required, uint32_t max_distance);

/// All fragments of one subquery over a corpus.
std::vector<Fragment> search(const search::QueryPlan& plan,
                             std::span<const std::vector<Occurrence>> docs,
                             uint32_t max_distance);

}  // namespace proxikey::oracle
