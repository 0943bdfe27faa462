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

#include "proxikey/index/index_format.hpp"

#include <fmt/format.h>

#include "proxikey/error.hpp"

namespace proxikey::index {

void IndexFiles::write(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  write_file(dir / kMetaFile, meta);
  write_file(dir / kLexiconFile, lexicon);
  write_file(dir / kOrdinaryFile, ordinary);
  write_file(dir / kCatalogFile, catalog);
  write_file(dir / kTriFile, tri);
}

IndexFiles IndexFiles::read(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError(fmt::format("index directory '{}' does not exist", dir.string()));
  }
  IndexFiles files;
  files.meta = read_file(dir / kMetaFile);
  files.lexicon = read_file(dir / kLexiconFile);
  files.ordinary = read_file(dir / kOrdinaryFile);
  files.catalog = read_file(dir / kCatalogFile);
  files.tri = read_file(dir / kTriFile);
  return files;
}

std::vector<uint8_t> serialize_meta(const IndexMeta& meta) {
  ByteWriter w = begin_sealed(kMetaMagic, kFormatVersion);

  ByteWriter config;
  config.put_u32(meta.max_distance);
  config.put_u32(meta.sw_count);
  config.put_u32(meta.fu_count);
  w.put_u32(static_cast<uint32_t>(MetaSection::kConfig));
  w.put_u64(config.size());
  w.put_bytes(config.bytes());

  ByteWriter docs;
  docs.put_u64(meta.documents.size());
  for (const auto& d : meta.documents) {
    docs.put_string(d.name);
    docs.put_u32(d.token_count);
  }
  w.put_u32(static_cast<uint32_t>(MetaSection::kDocuments));
  w.put_u64(docs.size());
  w.put_bytes(docs.bytes());

  return finish_sealed(std::move(w));
}

IndexMeta deserialize_meta(std::span<const uint8_t> file) {
  ByteReader r(open_sealed(file, kMetaMagic, kFormatVersion, kMetaFile), kMetaFile,
               kSealedHeaderSize);
  IndexMeta meta;
  bool have_config = false;
  bool have_docs = false;
  while (!r.at_end()) {
    const uint32_t tag = r.get_u32();
    const uint64_t length = r.get_u64();
    if (length > r.remaining()) r.fail("section overruns file");
    const size_t section_offset = r.offset();
    ByteReader section(r.get_bytes(static_cast<size_t>(length)), kMetaFile, section_offset);
    switch (static_cast<MetaSection>(tag)) {
      case MetaSection::kConfig:
        meta.max_distance = section.get_u32();
        meta.sw_count = section.get_u32();
        meta.fu_count = section.get_u32();
        have_config = true;
        break;
      case MetaSection::kDocuments: {
        const uint64_t n = section.get_u64();
        for (uint64_t i = 0; i < n; ++i) {
          DocumentInfo d;
          d.name = section.get_string();
          d.token_count = section.get_u32();
          meta.documents.push_back(std::move(d));
        }
        have_docs = true;
        break;
      }
      default:
        continue;
    }
    if (!section.at_end()) section.fail("trailing bytes in section");
  }
  if (!have_config || !have_docs) throw FormatError("meta: missing config or document section");
  if (meta.max_distance == 0) throw FormatError("meta: MaxDistance must be at least 1");
  return meta;
}

}  // namespace proxikey::index
