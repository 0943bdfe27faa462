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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "proxikey/lexicon/fl_list.hpp"

namespace proxikey::index {

using lexicon::LemmaId;
using DocId = uint32_t;

/// Physical key of the three-component index: stop lemmas ordered by
/// FL-number, f <= s <= t.
struct TriKey {
  LemmaId f = 0;
  LemmaId s = 0;
  LemmaId t = 0;

  LemmaId operator[](size_t i) const { return i == 0 ? f : (i == 1 ? s : t); }
  bool ordered() const { return f <= s && s <= t; }

  friend auto operator<=>(const TriKey&, const TriKey&) = default;
};

/// One anchored co-occurrence: the f-lemma sits at `pos`, the s-lemma at
/// `pos + d1` and the t-lemma at `pos + d2`.
///
/// Lists are strictly increasing in (doc, pos, d1, d2).
struct Posting {
  DocId doc = 0;
  uint32_t pos = 0;
  int32_t d1 = 0;
  int32_t d2 = 0;

  friend auto operator<=>(const Posting&, const Posting&) = default;
};

struct OrdinaryPosting {
  DocId doc = 0;
  uint32_t pos = 0;

  friend auto operator<=>(const OrdinaryPosting&, const OrdinaryPosting&) = default;
};

/// A lemma at a word position. A position may carry several lemmas.
struct Occurrence {
  uint32_t position = 0;
  LemmaId lemma = 0;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

using TriPostingMap = std::map<TriKey, std::vector<Posting>>;

/// "(be, who, who)" style rendering with lemma strings.
std::string format_key(const TriKey& key, const lexicon::FLList& fl);

}  // namespace proxikey::index
