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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace proxikey::lexicon {

/// A lemma's FL-number: its 0-based rank in the frequency-sorted lemma list.
/// The rank doubles as the lemma id everywhere in the index.
using LemmaId = uint32_t;

enum class LemmaClass { kStop, kFrequentlyUsed, kOrdinary };

std::string_view to_string(LemmaClass c);

struct LexiconConfig {
  uint32_t sw_count = 700;
  uint32_t fu_count = 2100;
  uint32_t max_distance = 5;
};

/// Frequency-ranked lemma list.
///
/// Ranks are dense 0..N-1 in order of decreasing occurrence count; equal
/// counts are ordered by ascending byte-wise lemma string. Immutable once
/// built.
class FLList {
 public:
  FLList() = default;

  /// Throws proxikey::Error("empty lexicon") when `counts` is empty.
  static FLList build(const std::map<std::string, uint64_t>& counts);

  size_t size() const { return lemmas_.size(); }
  bool empty() const { return lemmas_.empty(); }

  std::optional<LemmaId> rank(std::string_view lemma) const;
  const std::string& lemma(LemmaId id) const { return lemmas_.at(id); }
  uint64_t count(LemmaId id) const { return counts_.at(id); }

  std::vector<uint8_t> serialize() const;
  static FLList deserialize(std::span<const uint8_t> file, const std::string& name);

  void save(const std::filesystem::path& path) const;
  static FLList load(const std::filesystem::path& path);

  friend bool operator==(const FLList& a, const FLList& b) {
    return a.lemmas_ == b.lemmas_ && a.counts_ == b.counts_;
  }

 private:
  void reindex();

  std::vector<std::string> lemmas_;
  std::vector<uint64_t> counts_;
  struct StringHash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  std::unordered_map<std::string, LemmaId, StringHash, std::equal_to<>> by_lemma_;
};

/// Reads `lemma<TAB>count` lines (`#` comments, blank lines ignored). Throws
/// proxikey::FormatError with the line number on malformed input.
std::map<std::string, uint64_t> parse_counts(std::istream& in, std::string_view source_name);
std::map<std::string, uint64_t> load_counts(const std::filesystem::path& path);

LemmaClass classify_rank(LemmaId rank, const LexiconConfig& cfg);

/// Lemmas missing from `fl` are ordinary.
LemmaClass classify(std::string_view lemma, const FLList& fl, const LexiconConfig& cfg);

/// Total order by ascending FL-number. Throws std::out_of_range for a lemma
/// that is not ranked.
std::strong_ordering compare_by_fl(std::string_view a, std::string_view b, const FLList& fl);

}  // namespace proxikey::lexicon
