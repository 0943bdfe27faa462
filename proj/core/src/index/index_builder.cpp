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

#include "proxikey/index/index_builder.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "proxikey/error.hpp"
#include "proxikey/index/codec.hpp"
#include "proxikey/index/tri_enumerator.hpp"

namespace proxikey::index {
namespace {

struct TriKeyHash {
  size_t operator()(const TriKey& k) const {
    uint64_t h = k.f;
    h = h * 0x9E3779B97F4A7C15ull ^ k.s;
    h = h * 0x9E3779B97F4A7C15ull ^ k.t;
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

std::vector<uint8_t> encode_ordinary(const std::vector<std::vector<OrdinaryPosting>>& lists) {
  ByteWriter blob;
  std::vector<OrdinaryEntry> directory(lists.size());
  for (size_t lemma = 0; lemma < lists.size(); ++lemma) {
    const auto& list = lists[lemma];
    directory[lemma].offset = blob.size();
    directory[lemma].count = list.size();
    for (size_t begin = 0; begin < list.size(); begin += kOrdinaryBlockSize) {
      const size_t end = std::min(list.size(), begin + kOrdinaryBlockSize);
      const auto block = encode_ordinary_block(std::span(list).subspan(begin, end - begin));
      blob.put_varint(end - begin);
      blob.put_varint(block.size());
      blob.put_bytes(block);
    }
    directory[lemma].length = blob.size() - directory[lemma].offset;
  }

  ByteWriter w = begin_sealed(kOrdinaryMagic, kFormatVersion);
  w.put_u64(directory.size());
  const uint64_t blob_start = kSealedHeaderSize + 8 + directory.size() * 24;
  for (const auto& e : directory) {
    w.put_u64(blob_start + e.offset);
    w.put_u64(e.length);
    w.put_u64(e.count);
  }
  PROXIKEY_CHECK(w.size() == blob_start, "ordinary directory size mismatch");
  w.put_bytes(blob.bytes());
  return finish_sealed(std::move(w));
}

}  // namespace

IndexFiles build_index_files(std::span<const SourceDocument> docs, const text::Dictionary& dict,
                             const lexicon::FLList& fl, const lexicon::LexiconConfig& cfg,
                             BuildSummary* summary) {
  if (docs.empty()) throw Error("empty corpus");
  if (cfg.max_distance == 0) throw Error("MaxDistance must be at least 1");
  if (docs.size() > std::numeric_limits<DocId>::max()) throw Error("too many documents");

  IndexMeta meta;
  meta.max_distance = cfg.max_distance;
  meta.sw_count = cfg.sw_count;
  meta.fu_count = cfg.fu_count;

  BuildSummary stats;
  std::vector<std::vector<OrdinaryPosting>> ordinary(fl.size());
  std::unordered_map<TriKey, std::vector<Posting>, TriKeyHash> tri;

  for (size_t i = 0; i < docs.size(); ++i) {
    const auto doc_id = static_cast<DocId>(i);
    const AnalyzedDocument analyzed = analyze(docs[i].text, dict, fl);
    meta.documents.push_back(DocumentInfo{docs[i].name, analyzed.token_count});
    stats.tokens += analyzed.token_count;
    for (const auto& o : analyzed.occurrences) {
      ordinary[o.lemma].push_back(OrdinaryPosting{doc_id, o.position});
    }
    const auto stops = stop_occurrences(analyzed.occurrences, cfg.sw_count);
    append_tri_postings(doc_id, stops, cfg.max_distance, tri);
  }

  std::vector<TriKey> keys;
  keys.reserve(tri.size());
  for (const auto& [key, list] : tri) keys.push_back(key);
  std::sort(keys.begin(), keys.end());

  ByteWriter tri_file = begin_sealed(kTriMagic, kFormatVersion);
  ByteWriter catalog = begin_sealed(kCatalogMagic, kFormatVersion);
  catalog.put_u64(keys.size());
  for (const auto& key : keys) {
    const auto& list = tri.at(key);
    const auto block = encode_posting_block(list);
    catalog.put_u32(key.f);
    catalog.put_u32(key.s);
    catalog.put_u32(key.t);
    catalog.put_u64(tri_file.size());
    catalog.put_u64(block.size());
    catalog.put_u64(list.size());
    tri_file.put_bytes(block);
    stats.tri_postings += list.size();
  }

  IndexFiles files;
  files.meta = serialize_meta(meta);
  files.lexicon = fl.serialize();
  files.ordinary = encode_ordinary(ordinary);
  files.catalog = finish_sealed(std::move(catalog));
  files.tri = finish_sealed(std::move(tri_file));

  stats.documents = docs.size();
  stats.tri_keys = keys.size();
  for (const auto& list : ordinary) stats.ordinary_postings += list.size();
  stats.bytes = files.total_bytes();
  if (summary) *summary = stats;
  return files;
}

BuildSummary build_index(std::span<const SourceDocument> docs, const text::Dictionary& dict,
                         const lexicon::FLList& fl, const lexicon::LexiconConfig& cfg,
                         const std::filesystem::path& dir) {
  BuildSummary summary;
  build_index_files(docs, dict, fl, cfg, &summary).write(dir);
  return summary;
}

}  // namespace proxikey::index
