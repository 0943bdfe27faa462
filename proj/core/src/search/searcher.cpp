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

#include "proxikey/search/searcher.hpp"

#include <algorithm>

#include "proxikey/index/baseline.hpp"
#include "proxikey/text/tokenizer.hpp"

namespace proxikey::search {

double proximity_score(std::span<const Fragment> fragments) {
  double score = 0.0;
  for (const auto& f : fragments) {
    const double width = 1.0 + static_cast<double>(f.span());
    score += 1.0 / (width * width);
  }
  return score;
}

std::vector<DocResult> rank_fragments(std::vector<Fragment> fragments, const Scorer& scorer) {
  std::sort(fragments.begin(), fragments.end());
  fragments.erase(std::unique(fragments.begin(), fragments.end()), fragments.end());

  std::vector<DocResult> docs;
  for (const auto& f : fragments) {
    if (docs.empty() || docs.back().doc != f.doc) docs.push_back(DocResult{f.doc, 0.0, {}});
    docs.back().fragments.push_back(f);
  }
  for (auto& d : docs) d.score = scorer(d.fragments);
  std::stable_sort(docs.begin(), docs.end(), [](const DocResult& a, const DocResult& b) {
    return a.score > b.score;
  });
  return docs;
}

SearchResult search(std::string_view query, const index::Index& index,
                    const text::Dictionary& dict, const SearchOptions& options) {
  std::vector<std::string> words;
  for (auto& token : text::tokenize(query)) words.push_back(std::move(token.surface));

  lexicon::LexiconConfig cfg;
  cfg.sw_count = index.meta().sw_count;
  cfg.fu_count = index.meta().fu_count;
  cfg.max_distance = index.meta().max_distance;

  const auto subqueries = expand_subqueries(words, dict, index.lexicon(), cfg);
  std::vector<QueryPlan> plans;
  for (const auto& sq : subqueries) plans.push_back(select_keys(sq));

  SearchResult result;
  result.subqueries = plans.size();
  std::vector<Fragment> fragments;
  for (const auto& plan : plans) {
    const SubqueryResult r = options.strategy == Strategy::kBaseline
                                 ? index::baseline_search_subquery(plan, index)
                                 : search_subquery(plan, index, options.combiner);
    result.postings_read += r.postings_read;
    fragments.insert(fragments.end(), r.fragments.begin(), r.fragments.end());
  }
  result.documents = rank_fragments(std::move(fragments), options.scorer);
  return result;
}

}  // namespace proxikey::search
