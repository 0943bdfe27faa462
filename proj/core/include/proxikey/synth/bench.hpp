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

#include <cstdint>

#include "proxikey/index/index_builder.hpp"
#include "proxikey/lexicon/fl_list.hpp"
#include "proxikey/synth/zipf_corpus.hpp"

namespace proxikey::synth {

struct BenchConfig {
  ZipfProfile corpus;
  QueryProfile queries;
  lexicon::LexiconConfig lexicon;
  uint32_t window_size = 64;
};

struct StrategyStats {
  uint64_t postings_read = 0;
  double seconds = 0.0;

  double mean_postings(size_t queries) const {
    return queries == 0 ? 0.0 : static_cast<double>(postings_read) / static_cast<double>(queries);
  }
};

struct BenchReport {
  index::BuildSummary build;
  double build_seconds = 0.0;
  size_t queries = 0;
  /// Queries whose two strategies disagreed on the fragment set.
  size_t mismatches = 0;
  StrategyStats combiner;
  StrategyStats baseline;

  /// Baseline postings over three-component postings; 0 without queries.
  double reduction() const;
};

/// Generates the corpus, builds the index in memory and runs every sampled
/// query through both strategies. Everything except the timings depends only
/// on the config.
BenchReport run_bench(const BenchConfig& config);

}  // namespace proxikey::synth
