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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxikey/index/posting.hpp"
#include "proxikey/lexicon/fl_list.hpp"
#include "proxikey/text/dictionary.hpp"

namespace proxikey::search {

using index::TriKey;
using lexicon::LemmaId;

inline constexpr size_t kMaxQueryWords = 16;

/// One lemma per query word, in query order. All lemmas are stop lemmas.
struct Subquery {
  std::vector<LemmaId> lemmas;

  size_t size() const { return lemmas.size(); }
  friend bool operator==(const Subquery&, const Subquery&) = default;
};

/// Lemmatizes `words` and returns the Cartesian product of each word's stop
/// lemmas (dictionary order, duplicates removed).
///
/// Throws UnsupportedQuery when a word has no stop lemma, when the query is
/// empty, or when it has more than kMaxQueryWords words.
std::vector<Subquery> expand_subqueries(std::span<const std::string> words,
                                        const text::Dictionary& dict, const lexicon::FLList& fl,
                                        const lexicon::LexiconConfig& cfg);

struct PlanComponent {
  LemmaId lemma = 0;
  /// Duplicate component: its positions are never fed to the position table.
  bool starred = false;
  /// Query word index the component was selected from.
  uint32_t slot = 0;

  friend bool operator==(const PlanComponent&, const PlanComponent&) = default;
};

/// A selected key. `components` is in physical (FL) order, so
/// components[i].lemma == key[i].
struct PlanKey {
  TriKey key;
  std::array<PlanComponent, 3> components;

  friend bool operator==(const PlanKey&, const PlanKey&) = default;
};

struct QueryPlan {
  Subquery subquery;
  std::vector<PlanKey> keys;
  /// Local number -> lemma id, in order of first appearance in the subquery.
  std::vector<LemmaId> local_lemmas;
  /// Local number -> occurrences required (multiplicity in the subquery).
  std::vector<uint32_t> required;

  std::optional<uint32_t> local_of(LemmaId lemma) const;
};

/// Greedy key selection.
///
/// Repeats while some subquery lemma is unused:
///   first component:  the most frequent (lowest FL) unused lemma;
///   second component: the least frequent unused lemma at another query index;
///   third component:  the least frequent unused lemma at an index different
///                     from both;
/// falling back to any lemma (ignoring "used", marked with a star) when no
/// unused candidate exists. A lemma becomes used as soon as it is selected,
/// so each distinct lemma is non-starred in exactly one component. Ties
/// prefer the lowest query index. For two-word subqueries the third component
/// has no fresh index and repeats the second word, starred.
///
/// Throws UnsupportedQuery for a subquery of one word, or one with more than
/// 64 distinct lemmas.
QueryPlan select_keys(const Subquery& subquery);

/// "(what, do, why*)" in physical order.
std::string format_plan_key(const PlanKey& key, const lexicon::FLList& fl);

}  // namespace proxikey::search
