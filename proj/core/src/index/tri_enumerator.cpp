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

#include "proxikey/index/tri_enumerator.hpp"

#include <fmt/format.h>

namespace proxikey::index {

TriPostingMap enumerate_tri_postings(DocId doc, std::span<const Occurrence> occurrences,
                                     uint32_t max_distance) {
  TriPostingMap out;
  append_tri_postings(doc, occurrences, max_distance, out);
  return out;
}

std::string format_key(const TriKey& key, const lexicon::FLList& fl) {
  return fmt::format("({}, {}, {})", fl.lemma(key.f), fl.lemma(key.s), fl.lemma(key.t));
}

}  // namespace proxikey::index
