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

#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "proxikey/index/analysis.hpp"
#include "proxikey/index/baseline.hpp"
#include "proxikey/index/codec.hpp"
#include "proxikey/index/index_builder.hpp"
#include "proxikey/index/index_reader.hpp"
#include "proxikey/index/tri_enumerator.hpp"
#include "proxikey/search/combiner.hpp"
#include "proxikey/search/query_plan.hpp"
#include "proxikey/synth/zipf_corpus.hpp"

namespace {

using namespace proxikey;

struct Corpus {
  std::vector<index::SourceDocument> docs;
  lexicon::FLList fl;
  lexicon::LexiconConfig cfg{700, 2100, 5};
  std::unique_ptr<index::Index> index;
  std::vector<search::QueryPlan> plans;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus c;
    synth::ZipfProfile profile;
    profile.docs = 2000;
    c.docs = synth::generate_corpus(profile);
    c.fl = lexicon::FLList::build(index::count_lemmas(c.docs, {}));
    c.index = std::make_unique<index::Index>(
        index::Index::from_files(index::build_index_files(c.docs, {}, c.fl, c.cfg)));
    synth::QueryProfile qp;
    qp.count = 50;
    for (const auto& q : synth::sample_queries(c.docs, c.fl, c.cfg.sw_count, qp)) {
      std::vector<std::string> words;
      for (size_t i = 0, j; i < q.size(); i = j + 1) {
        j = q.find(' ', i);
        if (j == std::string::npos) j = q.size();
        words.push_back(q.substr(i, j - i));
      }
      for (const auto& sq : search::expand_subqueries(words, {}, c.fl, c.cfg)) {
        c.plans.push_back(search::select_keys(sq));
      }
    }
    return c;
  }();
  return c;
}

void BM_EncodePostings(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<index::Posting> postings;
  index::Posting p{0, 0, 1, 2};
  for (int64_t i = 0; i < state.range(0); ++i) {
    if (rng() % 4 == 0) p.doc += 1 + rng() % 3;
    p.pos += 1 + rng() % 20;
    postings.push_back(p);
  }
  for (auto _ : state) benchmark::DoNotOptimize(index::encode_posting_block(postings));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EncodePostings)->Arg(1 << 16);

void BM_DecodePostings(benchmark::State& state) {
  std::vector<index::Posting> postings;
  for (int64_t i = 0; i < state.range(0); ++i) {
    postings.push_back({static_cast<uint32_t>(i / 50), static_cast<uint32_t>(i % 50 * 3), -2, 4});
  }
  const auto block = index::encode_posting_block(postings);
  for (auto _ : state) benchmark::DoNotOptimize(index::decode_posting_block(block));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DecodePostings)->Arg(1 << 16);

void BM_EnumerateDocument(benchmark::State& state) {
  const auto& c = corpus();
  const auto occ = index::stop_occurrences(index::analyze(c.docs[0].text, {}, c.fl).occurrences,
                                           c.cfg.sw_count);
  for (auto _ : state) benchmark::DoNotOptimize(index::enumerate_tri_postings(0, occ, 5));
}
BENCHMARK(BM_EnumerateDocument);

void BM_BuildIndex(benchmark::State& state) {
  const auto& c = corpus();
  const std::span<const index::SourceDocument> docs(c.docs.data(), 200);
  for (auto _ : state) benchmark::DoNotOptimize(index::build_index_files(docs, {}, c.fl, c.cfg));
}
BENCHMARK(BM_BuildIndex)->Unit(benchmark::kMillisecond);

void BM_SearchTriKey(benchmark::State& state) {
  const auto& c = corpus();
  search::CombinerOptions options;
  options.window_size = static_cast<uint32_t>(state.range(0));
  uint64_t postings = 0;
  for (auto _ : state) {
    for (const auto& plan : c.plans) {
      postings += search::search_subquery(plan, *c.index, options).postings_read;
    }
  }
  state.counters["postings/query"] = benchmark::Counter(
      static_cast<double>(postings) / static_cast<double>(c.plans.size()),
      benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SearchTriKey)->Arg(10)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SearchBaseline(benchmark::State& state) {
  const auto& c = corpus();
  uint64_t postings = 0;
  for (auto _ : state) {
    for (const auto& plan : c.plans) {
      postings += index::baseline_search_subquery(plan, *c.index).postings_read;
    }
  }
  state.counters["postings/query"] = benchmark::Counter(
      static_cast<double>(postings) / static_cast<double>(c.plans.size()),
      benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SearchBaseline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
