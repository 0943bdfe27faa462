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

#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <tuple>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace proxikey::testing {

std::vector<index::SourceDocument> two_documents() {
  return {{"d0.txt", "Who are you is the album by The Who"},
          {"d1.txt", "Who has reality, who is real, who is true"}};
}

text::Dictionary two_documents_dictionary() {
  text::Dictionary dict;
  dict.add("are", {"are", "be"});
  dict.add("is", {"be"});
  dict.add("has", {"have"});
  return dict;
}

std::map<std::string, uint64_t> two_documents_counts() {
  return {{"be", 1500}, {"have", 1000}, {"you", 900}, {"are", 600}, {"who", 500}};
}

std::vector<index::SourceDocument> trace_document() {
  return {{"band.txt",
           "Text: The book that you are looking at is about the famous rock band \"The Who\". "
           "Their songs include \"I Need You\", \"You\", \"One at a Time\" and \"Who are you\"."}};
}

std::map<std::string, uint64_t> trace_counts() {
  return {{"i", 100}, {"you", 90}, {"need", 80}, {"who", 70}};
}

std::vector<std::vector<index::Occurrence>> Built::stop_occurrences() const {
  std::vector<std::vector<index::Occurrence>> out;
  for (const auto& d : docs) {
    out.push_back(index::stop_occurrences(index::analyze(d.text, dict, fl).occurrences, cfg.sw_count));
  }
  return out;
}

Built build(std::vector<index::SourceDocument> docs, text::Dictionary dict,
            const std::map<std::string, uint64_t>& overrides, lexicon::LexiconConfig cfg) {
  Built b;
  b.docs = std::move(docs);
  b.dict = std::move(dict);
  b.cfg = cfg;
  auto counts = index::count_lemmas(b.docs, b.dict);
  for (const auto& [lemma, count] : overrides) counts[lemma] = count;
  b.fl = lexicon::FLList::build(counts);
  b.files = index::build_index_files(b.docs, b.dict, b.fl, cfg);
  b.index = std::make_unique<index::Index>(index::Index::from_files(b.files));
  return b;
}

Built build_two_documents(uint32_t max_distance) {
  return build(two_documents(), two_documents_dictionary(), two_documents_counts(),
               {700, 2100, max_distance});
}

Built build_trace_document() {
  return build(trace_document(), text::Dictionary(), trace_counts(), {700, 2100, 7});
}

lexicon::LemmaId id(const Built& b, const std::string& lemma) {
  const auto r = b.fl.rank(lemma);
  if (!r) throw std::out_of_range("lemma not ranked: " + lemma);
  return *r;
}

std::vector<index::Posting> random_postings(size_t n, uint64_t seed, uint32_t max_distance) {
  std::mt19937_64 rng(seed);
  const int32_t m = static_cast<int32_t>(max_distance);
  std::uniform_int_distribution<int32_t> distance(-m, m);
  std::uniform_int_distribution<uint32_t> doc_gap(0, 3), pos_gap(0, 40);
  std::vector<index::Posting> out;
  index::Posting p{0, 0, 0, 0};
  std::set<std::tuple<int32_t, int32_t>> used;
  while (out.size() < n) {
    const uint32_t dg = doc_gap(rng);
    if (dg > 0 || out.empty()) {
      p.doc += dg;
      p.pos = pos_gap(rng) * 1000;
      used.clear();
    } else if (rng() % 3 == 0) {
      p.pos += pos_gap(rng) + 1;
      used.clear();
    }
    const int32_t d1 = distance(rng), d2 = distance(rng);
    if (d1 == 0 || d2 == 0 || d1 == d2 || int64_t{p.pos} + std::min(d1, d2) < 0) continue;
    if (!used.emplace(d1, d2).second) continue;
    out.push_back(index::Posting{p.doc, p.pos, d1, d2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TempDir::TempDir() {
  static std::atomic<uint64_t> counter{0};
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto candidate = std::filesystem::temp_directory_path() /
                     ("proxikey-test-" + std::to_string(::getpid()) + "-" +
                      std::to_string(counter++) + "-" + std::to_string(rd()));
    if (std::filesystem::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace proxikey::testing
