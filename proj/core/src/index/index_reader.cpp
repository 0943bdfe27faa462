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

#include "proxikey/index/index_reader.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::index {

Index Index::open(const std::filesystem::path& dir) { return from_files(IndexFiles::read(dir)); }

Index Index::from_files(IndexFiles files) {
  Index index;
  index.files_ = std::move(files);
  index.meta_ = deserialize_meta(index.files_.meta);
  index.lexicon_ = lexicon::FLList::deserialize(index.files_.lexicon, kLexiconFile);

  const auto tri_payload = open_sealed(index.files_.tri, kTriMagic, kFormatVersion, kTriFile);
  const uint64_t tri_end = kSealedHeaderSize + tri_payload.size();

  ByteReader cat(open_sealed(index.files_.catalog, kCatalogMagic, kFormatVersion, kCatalogFile),
                 kCatalogFile, kSealedHeaderSize);
  const uint64_t keys = cat.get_u64();
  if (keys > cat.remaining() / 36) cat.fail("catalog count exceeds file size");
  index.catalog_.reserve(keys);
  uint64_t expected_offset = kSealedHeaderSize;
  for (uint64_t i = 0; i < keys; ++i) {
    CatalogEntry e;
    e.key.f = cat.get_u32();
    e.key.s = cat.get_u32();
    e.key.t = cat.get_u32();
    e.offset = cat.get_u64();
    e.length = cat.get_u64();
    e.count = cat.get_u64();
    if (!e.key.ordered()) cat.fail("catalog key components not in FL order");
    if (!index.catalog_.empty() && !(index.catalog_.back().key < e.key)) {
      cat.fail("catalog keys not strictly increasing");
    }
    if (e.offset != expected_offset || e.length > tri_end - e.offset) {
      cat.fail(fmt::format("catalog entry {} has a bad block range", i));
    }
    if (e.count == 0 || e.length == 0) cat.fail("catalog entry for an empty list");
    expected_offset = e.offset + e.length;
    index.catalog_.push_back(e);
  }
  if (!cat.at_end()) cat.fail("trailing bytes");
  if (expected_offset != tri_end) {
    throw FormatError(fmt::format("{}: {} unreferenced bytes", kTriFile, tri_end - expected_offset));
  }

  const auto ord_payload =
      open_sealed(index.files_.ordinary, kOrdinaryMagic, kFormatVersion, kOrdinaryFile);
  const uint64_t ord_end = kSealedHeaderSize + ord_payload.size();
  ByteReader ord(ord_payload, kOrdinaryFile, kSealedHeaderSize);
  const uint64_t lemmas = ord.get_u64();
  if (lemmas != index.lexicon_.size()) ord.fail("directory size disagrees with the lexicon");
  index.ordinary_.reserve(lemmas);
  for (uint64_t i = 0; i < lemmas; ++i) {
    OrdinaryEntry e;
    e.offset = ord.get_u64();
    e.length = ord.get_u64();
    e.count = ord.get_u64();
    if (e.offset > ord_end || e.length > ord_end - e.offset) {
      ord.fail(fmt::format("directory entry {} has a bad block range", i));
    }
    index.ordinary_.push_back(e);
  }
  return index;
}

const CatalogEntry* Index::find(const TriKey& key) const {
  const auto it = std::lower_bound(catalog_.begin(), catalog_.end(), key,
                                   [](const CatalogEntry& e, const TriKey& k) { return e.key < k; });
  if (it == catalog_.end() || it->key != key) return nullptr;
  return &*it;
}

TriPostingIterator Index::open_tri(const TriKey& key) const {
  const CatalogEntry* e = find(key);
  if (!e) {
    return TriPostingIterator(key, {}, 0, {}, 0);
  }
  std::span<const uint8_t> block(files_.tri.data() + e->offset, e->length);
  return TriPostingIterator(
      key, block, e->count,
      fmt::format("{} key ({}, {}, {})", kTriFile, key.f, key.s, key.t), e->offset);
}

OrdinaryPostingIterator Index::open_ordinary(LemmaId lemma) const {
  if (lemma >= ordinary_.size()) return OrdinaryPostingIterator(lemma, {}, 0, {}, 0);
  const OrdinaryEntry& e = ordinary_[lemma];
  std::span<const uint8_t> blocks(files_.ordinary.data() + e.offset, e.length);
  return OrdinaryPostingIterator(lemma, blocks, e.count,
                                 fmt::format("{} lemma {}", kOrdinaryFile, lemma), e.offset);
}

std::vector<std::vector<Occurrence>> document_occurrences(const Index& index, LemmaId limit) {
  std::vector<std::vector<Occurrence>> docs(index.meta().documents.size());
  const auto lemmas = std::min<size_t>(limit, index.ordinary_directory().size());
  for (LemmaId lemma = 0; lemma < lemmas; ++lemma) {
    for (auto it = index.open_ordinary(lemma); !it.exhausted(); it.next()) {
      if (it.value().doc >= docs.size()) throw FormatError("ordinary posting outside the corpus");
      docs[it.value().doc].push_back(Occurrence{it.value().pos, lemma});
    }
  }
  for (auto& doc : docs) std::sort(doc.begin(), doc.end());
  return docs;
}

}  // namespace proxikey::index
