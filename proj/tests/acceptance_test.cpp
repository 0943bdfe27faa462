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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "proxikey/index/baseline.hpp"
#include "proxikey/index/codec.hpp"
#include "proxikey/index/index_builder.hpp"
#include "proxikey/index/verify.hpp"
#include "proxikey/oracle/oracle.hpp"
#include "proxikey/search/combiner.hpp"
#include "proxikey/search/query_plan.hpp"
#include "proxikey/synth/bench.hpp"
#include "proxikey/synth/zipf_corpus.hpp"
#include "support.hpp"

namespace px = proxikey;
using px::index::Posting;
using px::index::TriKey;
using px::search::Fragment;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Fragment> sorted(std::vector<Fragment> f) {
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<Posting> list_of(const px::index::Index& index, const TriKey& key) {
  std::vector<Posting> out;
  for (auto it = index.open_tri(key); !it.exhausted(); it.next()) out.push_back(it.value());
  return out;
}

Outcome index_vectors() {
  const auto t0 = Clock::now();
  const auto b = px::testing::build_two_documents(5);
  const auto id = [&](const char* l) { return px::testing::id(b, l); };
  Outcome o;
  const std::vector<Posting> be_who_who = {
      {0, 3, -3, 5}, {1, 4, -4, -1}, {1, 4, -4, 2}, {1, 4, -1, 2}, {1, 7, -4, -1}};
  const auto got = list_of(*b.index, TriKey{id("be"), id("who"), id("who")});
  if (got != be_who_who) {
    o.pass = false;
    o.detail += "(be, who, who) list differs; ";
  }
  const auto yaw = list_of(*b.index, TriKey{id("you"), id("are"), id("who")});
  if (std::find(yaw.begin(), yaw.end(), Posting{0, 2, -1, -2}) == yaw.end()) {
    o.pass = false;
    o.detail += "(you, are, who) lacks (0, 2, -1, -2); ";
  }
  if (list_of(*b.index, TriKey{id("have"), id("who"), id("who")}).empty()) {
    o.pass = false;
    o.detail += "(have, who, who) missing; ";
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.pass = false;
  o.detail += "build+lookup " + std::to_string(s) + " s";
  return o;
}

Outcome key_selection() {
  enum : px::lexicon::LemmaId {
    kAnd = 28, kYou = 47, kWhat = 132, kDo = 154, kSay = 165, kAre = 268, kWho = 293, kWhy = 528
  };
  const px::search::Subquery sq{{kWho, kAre, kYou, kAnd, kWhy, kDo, kYou, kSay, kWhat, kYou, kDo}};
  const auto plan = px::search::select_keys(sq);
  const std::vector<TriKey> expected = {{kAnd, kWho, kWhy}, {kYou, kSay, kAre}, {kWhat, kDo, kWhy}};
  // Expected keys in physical (FL) order.
  std::vector<TriKey> physical;
  for (auto k : expected) {
    std::array<px::lexicon::LemmaId, 3> c = {k.f, k.s, k.t};
    std::sort(c.begin(), c.end());
    physical.push_back({c[0], c[1], c[2]});
  }
  Outcome o;
  int stars = 0;
  bool why_starred = false;
  if (plan.keys.size() != 3) {
    o.pass = false;
  } else {
    for (size_t i = 0; i < 3; ++i) {
      if (plan.keys[i].key != physical[i]) o.pass = false;
      for (const auto& c : plan.keys[i].components) {
        stars += c.starred;
        if (c.starred && i == 2 && c.lemma == kWhy) why_starred = true;
      }
    }
  }
  o.pass = o.pass && stars == 1 && why_starred;
  o.detail = std::to_string(plan.keys.size()) + " keys, " + std::to_string(stars) + " starred";
  return o;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::vector<const char*> argv = {"proxikey"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = px::tools::run(static_cast<int>(argv.size()), argv.data(), o, e,
                                  [](std::string_view) { return std::optional<std::string>(); });
  out = o.str() + e.str();
  return code;
}

Outcome incremental_trace() {
  px::testing::TempDir dir;
  std::filesystem::create_directory(dir / "corpus");
  const auto doc = px::testing::trace_document().front();
  px::testing::write_text(dir / "corpus" / doc.name, doc.text);
  px::testing::write_text(dir / "dict.tsv", "");
  px::testing::write_text(dir / "counts.tsv", "i\t100\nyou\t90\nneed\t80\nwho\t70\n");
  const std::string idx = (dir / "idx").string(), dict = (dir / "dict.tsv").string();
  std::string out;
  Outcome o;
  if (run_cli({"--index", idx, "--dict", dict, "build", (dir / "corpus").string(), "-M", "7",
               "--fl-counts", (dir / "counts.tsv").string()},
              out) != 0) {
    return {false, "build failed: " + out};
  }
  const int code = run_cli({"--index", idx, "--dict", dict, "query", "--trace", "--window-size",
                            "14", "--trace-start", "4", "Who I need you"},
                           out);
  const std::vector<std::string> expected = {
      "Shift Start=4",
      "Read posting (19, 20, 15) key (i, need, who)",
      "Set (position 19, key i), buffer 1",
      "Set (position 20, key need), buffer 1",
      "Set (position 15, key who), buffer 0",
      "Read posting (21, 20, 15) key (you, need*, who*)",
      "Set (position 21, key you), buffer 1",
      "Read posting (21, 20, 28) key (you, need*, who*)",
      "Set (position 21, key you), buffer 1",
      "Read posting (22, 20, 15) key (you, need*, who*)",
      "Set (position 22, key you), buffer 1",
      "Read posting (22, 20, 28) key (you, need*, who*)",
      "Set (position 22, key you), buffer 1",
      "Populate Source",
      "Fetch (position 15, key who)",
      "Add (key who) Count!=Max",
      "Buffer switch, Start=18",
      "Populate Source",
      "Fetch (position 19, key i)",
      "Add (key i) Count!=Max",
      "Fetch (position 20, key need)",
      "Add (key need) Count!=Max",
      "Fetch (position 21, key you)",
      "Add (key you) Count=Max",
      "Result (from 15, to 21)",
  };
  const auto lines = split_lines(out);
  size_t matched = 0;
  while (matched < expected.size() && matched < lines.size() && lines[matched] == expected[matched]) {
    ++matched;
  }
  size_t results = 0;
  bool sole = false;
  for (const auto& l : lines) {
    if (l.rfind("doc=", 0) == 0) {
      ++results;
      sole = l.find("fragments=[(15,21)]") != std::string::npos;
    }
  }
  o.pass = code == 0 && matched == expected.size() && results == 1 && sole;
  o.detail = std::to_string(matched) + "/" + std::to_string(expected.size()) +
             " trace lines match, " + std::to_string(results) + " result document(s)";
  return o;
}

struct RandomizedOutcome {
  Outcome oracle, window, baseline;
};

// Subquery drawn from the text so that it usually has matches: the stop
// lemmas of consecutive stop positions from a random starting point.
px::search::Subquery text_subquery(const std::vector<std::vector<px::index::Occurrence>>& docs,
                                   size_t length, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const auto& d = docs[rng() % docs.size()];
    if (d.empty()) continue;
    px::search::Subquery sq;
    uint32_t last = UINT32_MAX;
    for (size_t i = rng() % d.size(); i < d.size() && sq.size() < length; ++i) {
      if (d[i].position == last) continue;
      last = d[i].position;
      sq.lemmas.push_back(d[i].lemma);
    }
    if (sq.size() == length) {
      std::shuffle(sq.lemmas.begin(), sq.lemmas.end(), rng);
      return sq;
    }
  }
  return {};
}

RandomizedOutcome randomized(size_t& cases_out) {
  const auto t0 = Clock::now();
  RandomizedOutcome r;
  size_t cases = 0, nonempty = 0, oracle_bad = 0, window_bad = 0, baseline_bad = 0;
  uint64_t fragments = 0;
  std::mt19937_64 rng(2026);
  for (uint32_t c = 0; c < 6; ++c) {
    px::synth::ZipfProfile profile;
    profile.docs = 60 + 28 * c;
    profile.vocab = 20 + 6 * c;
    profile.exponent = 0.7 + 0.1 * c;
    profile.min_tokens = 10;
    profile.max_tokens = 80 + 84 * c;
    profile.seed = 100 + c;
    const auto docs = px::synth::generate_corpus(profile);
    px::text::Dictionary dict;
    dict.add(px::synth::zipf_word(1), {px::synth::zipf_word(1), px::synth::zipf_word(4)});
    dict.add(px::synth::zipf_word(6), {px::synth::zipf_word(6), px::synth::zipf_word(0)});
    const uint32_t sw_count = profile.vocab * 2 / 3;
    for (uint32_t m : {3u, 5u, 7u}) {
      const auto b = px::testing::build(docs, dict, {}, {sw_count, 2100, m});
      const auto occurrences = b.stop_occurrences();
      const uint32_t stops = std::min<uint32_t>(sw_count, static_cast<uint32_t>(b.fl.size()));
      for (int q = 0; q < 60; ++q) {
        const size_t length = 2 + rng() % 5;
        px::search::Subquery sq;
        if (q % 2 == 0) sq = text_subquery(occurrences, length, rng);
        while (sq.size() < length) sq.lemmas.push_back(static_cast<uint32_t>(rng() % stops));
        const auto plan = px::search::select_keys(sq);
        const auto expected = sorted(px::oracle::search(plan, occurrences, m));
        ++cases;
        nonempty += !expected.empty();
        fragments += expected.size();

        std::vector<std::vector<Fragment>> per_window;
        for (uint32_t w : {2 * m, 2 * m + 1, 32u, 64u}) {
          px::search::CombinerOptions options;
          options.window_size = w;
          per_window.push_back(sorted(px::search::search_subquery(plan, *b.index, options).fragments));
        }
        bool oracle_ok = true, window_ok = true;
        for (const auto& f : per_window) {
          oracle_ok &= f == expected;
          window_ok &= f == per_window.front();
        }
        const auto base = sorted(px::index::baseline_search_subquery(plan, *b.index).fragments);
        oracle_bad += !oracle_ok;
        window_bad += !window_ok;
        baseline_bad += base != per_window.back();
      }
    }
  }
  const double s = seconds_since(t0);
  cases_out = cases;
  const std::string summary = std::to_string(cases) + " cases (" + std::to_string(nonempty) +
                              " with matches, " + std::to_string(fragments) + " fragments), ";
  r.oracle = {cases >= 1000 && oracle_bad == 0 && s < 300,
              summary + std::to_string(oracle_bad) + " mismatches, " + std::to_string(s) + " s"};
  r.window = {cases >= 1000 && window_bad == 0,
              std::to_string(window_bad) + " cases differ across window sizes"};
  r.baseline = {cases >= 1000 && baseline_bad == 0,
                std::to_string(baseline_bad) + " cases where baseline differs"};
  return r;
}

Outcome postings_reduction() {
  const auto t0 = Clock::now();
  px::synth::BenchConfig config;
  config.lexicon = {700, 2100, 5};
  const auto r = px::synth::run_bench(config);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "factor " << r.reduction() << " over " << r.queries << " queries (tri-key "
    << r.combiner.mean_postings(r.queries) << " vs baseline " << r.baseline.mean_postings(r.queries)
    << " postings/query), " << r.mismatches << " mismatches, " << s << " s";
  return {r.queries > 0 && r.reduction() >= 10.0 && r.mismatches == 0 && s < 600, d.str()};
}

Outcome format_round_trip() {
  Outcome o;
  const auto postings = px::testing::random_postings(100'000, 99);
  const auto block = px::index::encode_posting_block(postings);
  const bool lossless = px::index::decode_posting_block(block) == postings;

  struct Fixture {
    std::string name;
    std::function<px::testing::Built()> make;
  };
  const std::vector<Fixture> fixtures = {
      {"two-documents", [] { return px::testing::build_two_documents(5); }},
      {"trace", [] { return px::testing::build_trace_document(); }},
      {"zipf", [] {
         px::synth::ZipfProfile p;
         p.docs = 300;
         p.vocab = 400;
         return px::testing::build(px::synth::generate_corpus(p), {}, {}, {50, 100, 5});
       }},
  };
  size_t identical = 0, verified = 0;
  for (const auto& f : fixtures) {
    const auto a = f.make();
    const auto b = f.make();
    px::testing::TempDir dir;
    a.files.write(dir.path());
    const auto back = px::index::IndexFiles::read(dir.path());
    const auto same = [](const px::index::IndexFiles& x, const px::index::IndexFiles& y) {
      return x.meta == y.meta && x.lexicon == y.lexicon && x.ordinary == y.ordinary &&
             x.catalog == y.catalog && x.tri == y.tri;
    };
    identical += same(a.files, b.files) && same(a.files, back);
    const auto report = px::index::verify_index(dir.path());
    verified += report.ok() && report.oracle_compared;
  }
  o.pass = lossless && identical == fixtures.size() && verified == fixtures.size();
  o.detail = std::string(lossless ? "100000 postings lossless" : "posting round trip LOSSY") +
             " (" + std::to_string(block.size()) + " bytes), " + std::to_string(identical) + "/" +
             std::to_string(fixtures.size()) + " rebuilds identical, " + std::to_string(verified) +
             "/" + std::to_string(fixtures.size()) + " verified";
  return o;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  std::vector<std::pair<int, Outcome>> results;
  results.emplace_back(1, guarded(index_vectors));
  results.emplace_back(2, guarded(key_selection));
  results.emplace_back(3, guarded(incremental_trace));
  size_t cases = 0;
  RandomizedOutcome r;
  try {
    r = randomized(cases);
  } catch (const std::exception& e) {
    r.oracle = r.window = r.baseline = {false, std::string("exception: ") + e.what()};
  }
  results.emplace_back(4, r.oracle);
  results.emplace_back(5, r.window);
  results.emplace_back(6, r.baseline);
  results.emplace_back(7, guarded(postings_reduction));
  results.emplace_back(8, guarded(format_round_trip));

  const char* names[] = {"",
                         "index vectors",
                         "key selection",
                         "incremental trace",
                         "oracle equivalence",
                         "window size invariance",
                         "baseline consistency",
                         "postings reduction",
                         "format round trip"};
  bool all = true;
  for (const auto& [n, o] : results) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " " << names[n] << ": "
              << o.detail << '\n';
    all &= o.pass;
  }
  return all ? 0 : 1;
}
