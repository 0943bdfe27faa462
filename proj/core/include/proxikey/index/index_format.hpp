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
#include <filesystem>
#include <string>
#include <vector>

#include "proxikey/binary.hpp"
#include "proxikey/index/posting.hpp"

namespace proxikey::index {

// Directory layout. Every file is sealed (magic, version, payload, CRC-32).
inline constexpr const char* kMetaFile = "meta";
inline constexpr const char* kLexiconFile = "lexicon.fl";
inline constexpr const char* kOrdinaryFile = "ordinary.idx";
inline constexpr const char* kCatalogFile = "trikey.cat";
inline constexpr const char* kTriFile = "trikey.idx";

inline constexpr uint32_t kFormatVersion = 1;
inline constexpr Magic kMetaMagic = {'P', 'X', 'K', 'M'};
inline constexpr Magic kOrdinaryMagic = {'P', 'X', 'K', 'O'};
inline constexpr Magic kCatalogMagic = {'P', 'X', 'K', 'C'};
inline constexpr Magic kTriMagic = {'P', 'X', 'K', 'T'};

/// Section tags inside `meta`. Readers skip tags they do not know.
enum class MetaSection : uint32_t {
  kConfig = 1,
  kDocuments = 2,
  kNearStopWords = 3,  // reserved, never written
  kTwoComponent = 4,   // reserved, never written
};

/// Ordinary lists are split into blocks of at most this many postings.
inline constexpr size_t kOrdinaryBlockSize = 4096;

struct DocumentInfo {
  std::string name;
  uint32_t token_count = 0;

  friend bool operator==(const DocumentInfo&, const DocumentInfo&) = default;
};

struct IndexMeta {
  uint32_t format_version = kFormatVersion;
  uint32_t max_distance = 5;
  uint32_t sw_count = 700;
  uint32_t fu_count = 2100;
  std::vector<DocumentInfo> documents;

  friend bool operator==(const IndexMeta&, const IndexMeta&) = default;
};

/// One row of `trikey.cat`; `offset` is absolute within `trikey.idx`.
struct CatalogEntry {
  TriKey key;
  uint64_t offset = 0;
  uint64_t length = 0;
  uint64_t count = 0;
};

/// One row of the `ordinary.idx` directory, indexed by lemma id.
struct OrdinaryEntry {
  uint64_t offset = 0;
  uint64_t length = 0;
  uint64_t count = 0;
};

/// Raw bytes of every index file; what gets written to or read from disk.
struct IndexFiles {
  std::vector<uint8_t> meta;
  std::vector<uint8_t> lexicon;
  std::vector<uint8_t> ordinary;
  std::vector<uint8_t> catalog;
  std::vector<uint8_t> tri;

  void write(const std::filesystem::path& dir) const;
  static IndexFiles read(const std::filesystem::path& dir);

  uint64_t total_bytes() const {
    return meta.size() + lexicon.size() + ordinary.size() + catalog.size() + tri.size();
  }
};

std::vector<uint8_t> serialize_meta(const IndexMeta& meta);
IndexMeta deserialize_meta(std::span<const uint8_t> file);

}  // namespace proxikey::index
