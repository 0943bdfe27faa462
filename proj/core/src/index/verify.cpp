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

#include "proxikey/index/verify.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "proxikey/error.hpp"
#include "proxikey/oracle/oracle.hpp"

namespace proxikey::index {
namespace {

class Checker {
 public:
  Checker(const Index& index, const VerifyOptions& options, VerifyReport& report)
      : index_(index), options_(options), report_(report) {}

  void run() {
    const auto& meta = index_.meta();
    occurrences_.assign(meta.documents.size(), {});
    check_ordinary();
    for (auto& doc : occurrences_) std::sort(doc.begin(), doc.end());
    const auto decoded = check_tri();

    uint64_t tokens = 0;
    for (const auto& d : meta.documents) tokens += d.token_count;
    if (tokens <= options_.oracle_token_limit && report_.ok()) compare_with_oracle(decoded);
  }

 private:
  void problem(std::string text) {
    if (report_.problems.size() < options_.max_problems) report_.problems.push_back(std::move(text));
  }

  bool has(DocId doc, uint32_t position, LemmaId lemma) const {
    const auto& occ = occurrences_[doc];
    return std::binary_search(occ.begin(), occ.end(), Occurrence{position, lemma});
  }

  void check_ordinary() {
    const auto& docs = index_.meta().documents;
    const auto directory = index_.ordinary_directory();
    for (LemmaId lemma = 0; lemma < directory.size(); ++lemma) {
      try {
        auto it = index_.open_ordinary(lemma);
        for (; !it.exhausted(); it.next()) {
          const auto& p = it.value();
          if (p.doc >= docs.size() || p.pos >= docs[p.doc].token_count) {
            problem(fmt::format("ordinary list '{}' (offset {}): posting ({}, {}) outside the corpus",
                                index_.lexicon().lemma(lemma), directory[lemma].offset, p.doc,
                                p.pos));
            break;
          }
          occurrences_[p.doc].push_back(Occurrence{p.pos, lemma});
        }
        report_.ordinary_postings += it.postings_read();
      } catch (const FormatError& e) {
        problem(fmt::format("ordinary list '{}': {}", index_.lexicon().lemma(lemma), e.what()));
      }
    }
  }

  std::string check_posting(const TriKey& key, const Posting& p, uint32_t max_distance) const {
    const auto& docs = index_.meta().documents;
    if (p.doc >= docs.size()) return "unknown document";
    const int64_t positions[3] = {p.pos, int64_t{p.pos} + p.d1, int64_t{p.pos} + p.d2};
    for (int32_t d : {p.d1, p.d2}) {
      if (d == 0 || static_cast<uint32_t>(std::abs(d)) > max_distance) return "distance out of range";
    }
    if (p.d1 == p.d2) return "D1 equals D2";
    if (key.s == key.t && p.d1 >= p.d2) return "repeated s/t lemma without D1 < D2";
    if (key.f == key.s && p.d1 <= 0) return "repeated f/s lemma anchored at the later occurrence";
    for (size_t c = 0; c < 3; ++c) {
      if (positions[c] < 0 || positions[c] >= docs[p.doc].token_count) return "position outside document";
      if (!has(p.doc, static_cast<uint32_t>(positions[c]), key[c])) {
        return fmt::format("text has no '{}' at position {}", index_.lexicon().lemma(key[c]),
                           positions[c]);
      }
    }
    return {};
  }

  TriPostingMap check_tri() {
    const auto& meta = index_.meta();
    const auto& fl = index_.lexicon();
    TriPostingMap decoded;
    for (const auto& entry : index_.catalog()) {
      ++report_.tri_keys;
      const TriKey& key = entry.key;
      if (key.t >= fl.size() || key.t >= meta.sw_count) {
        problem(fmt::format("key ({}, {}, {}) at offset {}: component is not a stop lemma", key.f,
                            key.s, key.t, entry.offset));
        continue;
      }
      const std::string name = format_key(key, fl);
      try {
        auto it = index_.open_tri(key);
        auto& list = decoded[key];
        for (; !it.exhausted(); it.next()) {
          const auto why = check_posting(key, it.value(), meta.max_distance);
          if (!why.empty()) {
            const auto& p = it.value();
            problem(fmt::format("key {} at offset {}: posting ({}, {}, {}, {}): {}", name,
                                entry.offset, p.doc, p.pos, p.d1, p.d2, why));
          }
          list.push_back(it.value());
        }
        report_.tri_postings += it.postings_read();
      } catch (const FormatError& e) {
        problem(fmt::format("key {}: {}", name, e.what()));
      }
    }
    return decoded;
  }

  void compare_with_oracle(const TriPostingMap& decoded) {
    const auto& meta = index_.meta();
    std::vector<std::vector<Occurrence>> stops(occurrences_.size());
    for (size_t d = 0; d < occurrences_.size(); ++d) {
      for (const auto& o : occurrences_[d]) {
        if (o.lemma < meta.sw_count) stops[d].push_back(o);
      }
    }
    const auto expected = oracle::tri_postings(stops, meta.max_distance);
    report_.oracle_compared = true;
    const auto& fl = index_.lexicon();
    for (const auto& [key, list] : expected) {
      const auto it = decoded.find(key);
      if (it == decoded.end()) {
        problem(fmt::format("key {} missing from the catalog", format_key(key, fl)));
      } else if (it->second != list) {
        const auto* entry = index_.find(key);
        problem(fmt::format("key {} at offset {}: {} postings stored, {} expected",
                            format_key(key, fl), entry ? entry->offset : 0, it->second.size(),
                            list.size()));
      }
    }
    for (const auto& [key, list] : decoded) {
      if (!expected.contains(key)) {
        problem(fmt::format("key {} has no co-occurrences in the text", format_key(key, fl)));
      }
    }
  }

  const Index& index_;
  const VerifyOptions& options_;
  VerifyReport& report_;
  std::vector<std::vector<Occurrence>> occurrences_;
};

}  // namespace

VerifyReport verify_index(const Index& index, const VerifyOptions& options) {
  VerifyReport report;
  Checker(index, options, report).run();
  return report;
}

VerifyReport verify_index(const std::filesystem::path& dir, const VerifyOptions& options) {
  try {
    return verify_index(Index::open(dir), options);
  } catch (const Error& e) {
    VerifyReport report;
    report.problems.push_back(e.what());
    return report;
  }
}

}  // namespace proxikey::index
