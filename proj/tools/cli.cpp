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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "proxikey/error.hpp"
#include "proxikey/index/baseline.hpp"
#include "proxikey/index/index_builder.hpp"
#include "proxikey/index/index_reader.hpp"
#include "proxikey/index/verify.hpp"
#include "proxikey/oracle/oracle.hpp"
#include "proxikey/search/searcher.hpp"
#include "proxikey/synth/bench.hpp"
#include "proxikey/text/tokenizer.hpp"

namespace proxikey::tools {
namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::optional<std::string> config_file;
  std::optional<uint32_t> max_distance;
  std::optional<uint32_t> sw_count;
  std::optional<uint32_t> fu_count;
  std::optional<uint32_t> window_size;
  std::optional<std::string> dictionary;
  std::optional<std::string> index;
};

Config resolve(const Overrides& o, const EnvLookup& env) {
  std::optional<fs::path> file;
  if (o.config_file) file = *o.config_file;
  Config c = load_config(file, env);
  if (o.max_distance) c.max_distance = *o.max_distance;
  if (o.sw_count) c.sw_count = *o.sw_count;
  if (o.fu_count) c.fu_count = *o.fu_count;
  if (o.window_size) c.window_size = *o.window_size;
  if (o.dictionary) c.dictionary = *o.dictionary;
  if (o.index) c.index = *o.index;
  return c;
}

text::Dictionary load_dictionary(const Config& c) {
  return c.dictionary.empty() ? text::Dictionary() : text::Dictionary::load(c.dictionary);
}

fs::path require_index(const Config& c) {
  if (c.index.empty()) throw Error("no index directory given (--index or PROXIKEY_INDEX)");
  return c.index;
}

std::vector<index::SourceDocument> read_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError(fmt::format("corpus directory '{}' not found", dir.string()));
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  std::vector<index::SourceDocument> docs;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream text;
    if (!in || !(text << in.rdbuf())) {
      // An empty file leaves the stream in a failed state too; only a
      // missing or unreadable file is an error.
      if (!in.is_open() || fs::file_size(p) != 0) {
        throw IoError(fmt::format("cannot read '{}'", p.string()));
      }
    }
    docs.push_back(index::SourceDocument{p.filename().string(), text.str()});
  }
  return docs;
}

std::string format_fragments(const std::vector<search::Fragment>& fragments) {
  std::string out = "[";
  for (size_t i = 0; i < fragments.size(); ++i) {
    if (i > 0) out += ',';
    out += fmt::format("({},{})", fragments[i].start, fragments[i].end);
  }
  return out + "]";
}

std::string format_subquery(const search::Subquery& sq, const lexicon::FLList& fl) {
  std::string out = "[";
  for (size_t i = 0; i < sq.lemmas.size(); ++i) {
    if (i > 0) out += ' ';
    out += fl.lemma(sq.lemmas[i]);
  }
  return out + "]";
}

lexicon::LexiconConfig lexicon_config(const index::IndexMeta& meta) {
  return {meta.sw_count, meta.fu_count, meta.max_distance};
}

std::vector<std::string> words_of(const std::vector<std::string>& args) {
  std::vector<std::string> words;
  for (const auto& a : args) {
    for (auto& t : text::tokenize(a)) words.push_back(std::move(t.surface));
  }
  return words;
}

int cmd_build(const Config& c, const std::string& corpus, const std::string& fl_counts,
              std::ostream& out) {
  if (c.max_distance == 0) throw Error("max_distance must be at least 1");
  if (c.sw_count == 0) throw Error("sw_count must be at least 1");
  const fs::path dir = require_index(c);
  const auto dict = load_dictionary(c);
  const auto docs = read_corpus(corpus);
  if (docs.empty()) throw Error(fmt::format("no .txt documents in '{}'", corpus));
  auto counts = index::count_lemmas(docs, dict);
  if (!fl_counts.empty()) {
    for (auto& [lemma, count] : lexicon::load_counts(fl_counts)) counts[lemma] = count;
  }
  const auto fl = lexicon::FLList::build(counts);
  fs::create_directories(dir);
  const auto summary = index::build_index(docs, dict, fl, {c.sw_count, c.fu_count, c.max_distance}, dir);
  fmt::print(out, "docs={}\ntokens={}\nlemmas={}\ntri_keys={}\ntri_postings={}\n", summary.documents,
             summary.tokens, fl.size(), summary.tri_keys, summary.tri_postings);
  fmt::print(out, "ordinary_postings={}\nbytes={}\n", summary.ordinary_postings, summary.bytes);
  return kOk;
}

struct QueryFlags {
  std::vector<std::string> query;
  bool trace = false;
  bool baseline = false;
  std::optional<size_t> max_results;
  std::optional<uint32_t> trace_start;
};

int cmd_query(Config c, const QueryFlags& q, std::ostream& out) {
  const auto index = index::Index::open(require_index(c));
  const auto dict = load_dictionary(c);
  c.max_distance = index.meta().max_distance;
  validate(c);

  search::SearchOptions options;
  options.strategy = q.baseline ? search::Strategy::kBaseline : search::Strategy::kCombiner;
  options.combiner.window_size = c.window_size;
  options.combiner.first_start = q.trace_start;
  if (q.trace) {
    options.combiner.trace = [&out](const std::string& line) { out << line << '\n'; };
    options.combiner.names = &index.lexicon();
  }
  std::string query;
  for (const auto& part : q.query) query += (query.empty() ? "" : " ") + part;

  const auto result = search::search(query, index, dict, options);
  const size_t shown = std::min(result.documents.size(), q.max_results.value_or(SIZE_MAX));
  for (size_t i = 0; i < shown; ++i) {
    const auto& d = result.documents[i];
    fmt::print(out, "doc={} score={:.6f} fragments={}\n", d.doc, d.score,
               format_fragments(d.fragments));
  }
  fmt::print(out, "postings_read={}\n", result.postings_read);
  return kOk;
}

int cmd_verify(const Config& c, uint64_t oracle_limit, std::ostream& out) {
  index::VerifyOptions options;
  options.oracle_token_limit = oracle_limit;
  const auto report = index::verify_index(require_index(c), options);
  for (const auto& p : report.problems) fmt::print(out, "problem: {}\n", p);
  fmt::print(out, "tri_keys={}\ntri_postings={}\nordinary_postings={}\noracle={}\n", report.tri_keys,
             report.tri_postings, report.ordinary_postings,
             report.oracle_compared ? "compared" : "skipped");
  fmt::print(out, "verify={}\n", report.ok() ? "ok" : "failed");
  return report.ok() ? kOk : kVerificationFailed;
}

int cmd_oracle_check(const Config& c, const std::vector<std::string>& query, std::ostream& out) {
  const auto index = index::Index::open(require_index(c));
  const auto dict = load_dictionary(c);
  const auto& meta = index.meta();
  const uint32_t m = meta.max_distance;
  const auto subqueries =
      search::expand_subqueries(words_of(query), dict, index.lexicon(), lexicon_config(meta));
  const auto occurrences = index::document_occurrences(index, meta.sw_count);

  std::set<uint32_t> windows;
  for (uint32_t w : {2 * m, 2 * m + 1, 32u, 64u}) {
    if (w >= 2 * m && w <= 64) windows.insert(w);
  }
  auto sorted = [](std::vector<search::Fragment> f) {
    std::sort(f.begin(), f.end());
    return f;
  };

  bool ok = true;
  for (const auto& sq : subqueries) {
    const auto plan = search::select_keys(sq);
    const auto expected = sorted(oracle::search(plan, occurrences, m));
    bool tri_ok = true;
    for (uint32_t w : windows) {
      search::CombinerOptions options;
      options.window_size = w;
      tri_ok &= sorted(search::search_subquery(plan, index, options).fragments) == expected;
    }
    const bool baseline_ok = sorted(index::baseline_search_subquery(plan, index).fragments) == expected;
    ok &= tri_ok && baseline_ok;
    fmt::print(out, "subquery={} oracle_fragments={} tri_key={} baseline={}\n",
               format_subquery(sq, index.lexicon()), expected.size(),
               tri_ok ? "match" : "MISMATCH", baseline_ok ? "match" : "MISMATCH");
  }
  fmt::print(out, "oracle_check={}\n", ok ? "ok" : "failed");
  return ok ? kOk : kVerificationFailed;
}

struct BenchFlags {
  uint32_t docs = 10'000;
  uint32_t vocab = 5'000;
  double zipf = 1.0;
  uint32_t queries = 100;
  uint64_t seed = 1;
  uint32_t min_tokens = 50;
  uint32_t max_tokens = 150;
};

int cmd_bench(const Config& c, const BenchFlags& b, std::ostream& out) {
  validate(c);
  synth::BenchConfig config;
  config.corpus = {b.docs, b.vocab, b.zipf, b.min_tokens, b.max_tokens, b.seed};
  config.queries = {b.queries, 3, 5, b.seed + 1};
  config.lexicon = {c.sw_count, c.fu_count, c.max_distance};
  config.window_size = c.window_size;
  const auto r = synth::run_bench(config);

  fmt::print(out, "docs={} tokens={} tri_keys={} tri_postings={} build_seconds={:.3f}\n",
             r.build.documents, r.build.tokens, r.build.tri_keys, r.build.tri_postings,
             r.build_seconds);
  fmt::print(out, "{:<10} {:>8} {:>20} {:>14}\n", "strategy", "queries", "mean_postings_read",
             "time_seconds");
  if (r.queries > 0) {
    fmt::print(out, "{:<10} {:>8} {:>20.1f} {:>14.4f}\n", "tri-key", r.queries,
               r.combiner.mean_postings(r.queries), r.combiner.seconds);
    fmt::print(out, "{:<10} {:>8} {:>20.1f} {:>14.4f}\n", "baseline", r.queries,
               r.baseline.mean_postings(r.queries), r.baseline.seconds);
    fmt::print(out, "reduction_factor={:.2f}\nmismatches={}\n", r.reduction(), r.mismatches);
  }
  return r.mismatches == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  CLI::App app{"Proximity full-text search over three-component stop-lemma keys", "proxikey"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_file, "Settings file with 'key = value' lines");
  app.add_option("--dict", o.dictionary, "Dictionary file (word<TAB>lemma,lemma)");
  app.add_option("--index", o.index, "Index directory");

  std::string corpus;
  auto* build = app.add_subcommand("build", "Build an index from a directory of .txt files");
  build->add_option("corpus", corpus, "Corpus directory")->required();
  build->add_option("-M,--max-distance", o.max_distance, "MaxDistance");
  std::string fl_counts;
  build->add_option("--fl-counts", fl_counts,
                    "lemma<TAB>count file overriding corpus frequencies in the FL-list");
  build->add_option("--sw-count,--swcount", o.sw_count, "Number of stop lemmas");
  build->add_option("--fu-count,--fucount", o.fu_count, "Number of frequently used lemmas");

  QueryFlags q;
  auto* query = app.add_subcommand("query", "Run a stop-word query");
  query->add_option("query", q.query, "Query words")->required();
  auto* trace_flag = query->add_flag("--trace", q.trace, "Print the combiner event log");
  query->add_flag("--baseline", q.baseline, "Evaluate with the ordinary positional lists")
      ->excludes(trace_flag);
  query->add_option("--max-results", q.max_results, "Print at most N documents");
  query->add_option("--trace-start", q.trace_start, "Origin of the first combiner window");
  query->add_option("--window-size", o.window_size, "Position table window size");

  uint64_t oracle_limit = index::VerifyOptions{}.oracle_token_limit;
  auto* verify = app.add_subcommand("verify", "Check every index invariant");
  verify->add_option("--oracle-limit", oracle_limit,
                     "Compare with brute-force enumeration up to this many tokens");

  std::vector<std::string> check_query;
  auto* check = app.add_subcommand("oracle-check",
                                   "Compare both strategies with the brute-force reference");
  check->add_option("query", check_query, "Query words")->required();

  BenchFlags b;
  auto* bench = app.add_subcommand("bench", "Synthetic Zipf corpus benchmark");
  bench->add_option("--docs", b.docs, "Documents")->capture_default_str();
  bench->add_option("--vocab", b.vocab, "Vocabulary size")->capture_default_str();
  bench->add_option("--zipf", b.zipf, "Zipf exponent")->capture_default_str();
  bench->add_option("--queries", b.queries, "Number of queries")->capture_default_str();
  bench->add_option("--seed", b.seed, "Random seed")->capture_default_str();
  bench->add_option("--min-tokens", b.min_tokens, "Shortest document")->capture_default_str();
  bench->add_option("--max-tokens", b.max_tokens, "Longest document")->capture_default_str();
  bench->add_option("-M,--max-distance", o.max_distance, "MaxDistance");
  bench->add_option("--sw-count,--swcount", o.sw_count, "Number of stop lemmas");
  bench->add_option("--window-size", o.window_size, "Position table window size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }

  try {
    const Config c = resolve(o, env);
    if (*build) return cmd_build(c, corpus, fl_counts, out);
    if (*query) return cmd_query(c, q, out);
    if (*verify) return cmd_verify(c, oracle_limit, out);
    if (*check) return cmd_oracle_check(c, check_query, out);
    if (*bench) return cmd_bench(c, b, out);
  } catch (const UnsupportedQuery& e) {
    err << "unsupported query: " << e.what() << '\n';
    return kUnsupportedQuery;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace proxikey::tools
