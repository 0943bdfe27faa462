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

#include "proxikey/lexicon/fl_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "proxikey/binary.hpp"
#include "proxikey/error.hpp"

namespace proxikey::lexicon {
namespace {

constexpr Magic kMagic = {'P', 'X', 'F', 'L'};
constexpr uint32_t kVersion = 1;

}  // namespace

std::string_view to_string(LemmaClass c) {
  switch (c) {
    case LemmaClass::kStop:
      return "stop";
    case LemmaClass::kFrequentlyUsed:
      return "frequently-used";
    case LemmaClass::kOrdinary:
      return "ordinary";
  }
  return "?";
}

FLList FLList::build(const std::map<std::string, uint64_t>& counts) {
  if (counts.empty()) throw Error("empty lexicon");
  std::vector<std::pair<std::string, uint64_t>> sorted(counts.begin(), counts.end());
  // std::map already orders by lemma, so a stable sort on count keeps ties
  // lexicographic.
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  FLList fl;
  fl.lemmas_.reserve(sorted.size());
  fl.counts_.reserve(sorted.size());
  for (auto& [lemma, count] : sorted) {
    fl.lemmas_.push_back(std::move(lemma));
    fl.counts_.push_back(count);
  }
  fl.reindex();
  return fl;
}

void FLList::reindex() {
  by_lemma_.clear();
  by_lemma_.reserve(lemmas_.size());
  for (LemmaId i = 0; i < lemmas_.size(); ++i) by_lemma_.emplace(lemmas_[i], i);
}

std::optional<LemmaId> FLList::rank(std::string_view lemma) const {
  const auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return std::nullopt;
  return it->second;
}

std::vector<uint8_t> FLList::serialize() const {
  ByteWriter w = begin_sealed(kMagic, kVersion);
  w.put_u64(lemmas_.size());
  for (size_t i = 0; i < lemmas_.size(); ++i) {
    w.put_string(lemmas_[i]);
    w.put_u64(counts_[i]);
  }
  return finish_sealed(std::move(w));
}

FLList FLList::deserialize(std::span<const uint8_t> file, const std::string& name) {
  ByteReader r(open_sealed(file, kMagic, kVersion, name), name, kSealedHeaderSize);
  const uint64_t n = r.get_u64();
  if (n == 0) throw FormatError(fmt::format("{}: empty lexicon", name));
  FLList fl;
  for (uint64_t i = 0; i < n; ++i) {
    fl.lemmas_.push_back(r.get_string());
    fl.counts_.push_back(r.get_u64());
    if (i > 0 && fl.counts_[i] > fl.counts_[i - 1]) r.fail("lexicon records out of rank order");
  }
  if (!r.at_end()) r.fail("trailing bytes");
  fl.reindex();
  if (fl.by_lemma_.size() != fl.lemmas_.size()) {
    throw FormatError(fmt::format("{}: duplicate lemma in lexicon", name));
  }
  return fl;
}

void FLList::save(const std::filesystem::path& path) const { write_file(path, serialize()); }

FLList FLList::load(const std::filesystem::path& path) {
  return deserialize(read_file(path), path.string());
}

std::map<std::string, uint64_t> parse_counts(std::istream& in, std::string_view source_name) {
  std::map<std::string, uint64_t> counts;
  std::string line;
  for (size_t n = 1; std::getline(in, line); ++n) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    uint64_t count = 0;
    const char* first = line.data() + (tab == std::string::npos ? 0 : tab + 1);
    const char* last = line.data() + line.size();
    const auto [end, ec] = std::from_chars(first, last, count);
    if (tab == std::string::npos || tab == 0 || ec != std::errc() || end != last) {
      throw FormatError(fmt::format("{}:{}: expected 'lemma<TAB>count'", source_name, n));
    }
    counts[line.substr(0, tab)] = count;
  }
  return counts;
}

std::map<std::string, uint64_t> load_counts(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  return parse_counts(in, path.string());
}

LemmaClass classify_rank(LemmaId rank, const LexiconConfig& cfg) {
  if (rank < cfg.sw_count) return LemmaClass::kStop;
  if (static_cast<uint64_t>(rank) < static_cast<uint64_t>(cfg.sw_count) + cfg.fu_count) {
    return LemmaClass::kFrequentlyUsed;
  }
  return LemmaClass::kOrdinary;
}

LemmaClass classify(std::string_view lemma, const FLList& fl, const LexiconConfig& cfg) {
  const auto r = fl.rank(lemma);
  return r ? classify_rank(*r, cfg) : LemmaClass::kOrdinary;
}

std::strong_ordering compare_by_fl(std::string_view a, std::string_view b, const FLList& fl) {
  const auto ra = fl.rank(a);
  const auto rb = fl.rank(b);
  if (!ra || !rb) {
    throw std::out_of_range(fmt::format("lemma '{}' is not ranked", ra ? b : a));
  }
  return *ra <=> *rb;
}

}  // namespace proxikey::lexicon
