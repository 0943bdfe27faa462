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

#include "proxikey/synth/bench.hpp"

#include <chrono>

#include "proxikey/index/index_reader.hpp"
#include "proxikey/search/searcher.hpp"

namespace proxikey::synth {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

double BenchReport::reduction() const {
  if (queries == 0 || combiner.postings_read == 0) return 0.0;
  return static_cast<double>(baseline.postings_read) / static_cast<double>(combiner.postings_read);
}

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  const text::Dictionary dict;
  const auto docs = generate_corpus(config.corpus);

  auto start = Clock::now();
  const auto fl = lexicon::FLList::build(index::count_lemmas(docs, dict));
  auto files = index::build_index_files(docs, dict, fl, config.lexicon, &report.build);
  const auto index = index::Index::from_files(std::move(files));
  report.build_seconds = since(start);

  const auto queries = sample_queries(docs, fl, config.lexicon.sw_count, config.queries);
  search::SearchOptions combiner;
  combiner.combiner.window_size = config.window_size;
  search::SearchOptions baseline;
  baseline.strategy = search::Strategy::kBaseline;

  for (const auto& query : queries) {
    start = Clock::now();
    const auto a = search::search(query, index, dict, combiner);
    report.combiner.seconds += since(start);
    report.combiner.postings_read += a.postings_read;

    start = Clock::now();
    const auto b = search::search(query, index, dict, baseline);
    report.baseline.seconds += since(start);
    report.baseline.postings_read += b.postings_read;

    ++report.queries;
    if (a.documents.size() != b.documents.size()) {
      ++report.mismatches;
      continue;
    }
    for (size_t i = 0; i < a.documents.size(); ++i) {
      if (a.documents[i].doc != b.documents[i].doc ||
          a.documents[i].fragments != b.documents[i].fragments) {
        ++report.mismatches;
        break;
      }
    }
  }
  return report;
}

}  // namespace proxikey::synth
