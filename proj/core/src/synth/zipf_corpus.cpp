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

#include "proxikey/synth/zipf_corpus.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "proxikey/text/tokenizer.hpp"

namespace proxikey::synth {

std::string zipf_word(uint32_t rank) { return fmt::format("w{}", rank); }

std::vector<index::SourceDocument> generate_corpus(const ZipfProfile& profile) {
  if (profile.vocab == 0) throw std::invalid_argument("vocabulary must not be empty");
  if (profile.min_tokens > profile.max_tokens) {
    throw std::invalid_argument("min_tokens exceeds max_tokens");
  }
  std::vector<double> weights(profile.vocab);
  for (uint32_t r = 0; r < profile.vocab; ++r) {
    weights[r] = 1.0 / std::pow(static_cast<double>(r) + 1.0, profile.exponent);
  }
  std::vector<std::string> words(profile.vocab);
  for (uint32_t r = 0; r < profile.vocab; ++r) words[r] = zipf_word(r);

  std::mt19937_64 rng(profile.seed);
  std::discrete_distribution<uint32_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<uint32_t> length(profile.min_tokens, profile.max_tokens);

  std::vector<index::SourceDocument> docs;
  docs.reserve(profile.docs);
  for (uint32_t d = 0; d < profile.docs; ++d) {
    index::SourceDocument doc;
    doc.name = fmt::format("doc{:06}", d);
    const uint32_t n = length(rng);
    for (uint32_t i = 0; i < n; ++i) {
      if (i > 0) doc.text += ' ';
      doc.text += words[pick(rng)];
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<std::string> sample_queries(const std::vector<index::SourceDocument>& docs,
                                        const lexicon::FLList& fl, uint32_t sw_count,
                                        const QueryProfile& profile) {
  std::vector<std::string> queries;
  if (docs.empty() || profile.count == 0 || profile.min_words > profile.max_words) return queries;

  std::mt19937_64 rng(profile.seed);
  std::uniform_int_distribution<size_t> pick_doc(0, docs.size() - 1);
  std::uniform_int_distribution<uint32_t> pick_len(profile.min_words, profile.max_words);
  const uint64_t attempts = uint64_t{profile.count} * 100;
  for (uint64_t a = 0; a < attempts && queries.size() < profile.count; ++a) {
    const auto tokens = text::tokenize(docs[pick_doc(rng)].text);
    if (tokens.empty()) continue;
    const uint32_t want = pick_len(rng);
    std::uniform_int_distribution<size_t> pick_pos(0, tokens.size() - 1);
    std::string query;
    uint32_t taken = 0;
    for (size_t i = pick_pos(rng); i < tokens.size() && taken < want; ++i) {
      const auto rank = fl.rank(tokens[i].surface);
      if (!rank || *rank >= sw_count) continue;
      if (taken++ > 0) query += ' ';
      query += tokens[i].surface;
    }
    if (taken == want) queries.push_back(std::move(query));
  }
  return queries;
}

}  // namespace proxikey::synth
