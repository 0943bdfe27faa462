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

#include "proxikey/index/codec.hpp"

#include <limits>

#include "proxikey/error.hpp"

namespace proxikey::index {
namespace {

// Shared (doc, pos) prefix of both record kinds.
void write_location(ByteWriter& out, DocId doc, uint32_t pos, const DocId* prev_doc,
                    const uint32_t* prev_pos) {
  const DocId base = prev_doc ? *prev_doc : 0;
  PROXIKEY_CHECK(doc >= base, "postings must be sorted by document");
  out.put_varint(doc - base);
  if (prev_doc && doc == *prev_doc) {
    PROXIKEY_CHECK(pos >= *prev_pos, "postings must be sorted by position");
    out.put_varint(pos - *prev_pos);
  } else {
    out.put_varint(pos);
  }
}

void read_location(ByteReader& in, DocId* doc, uint32_t* pos, const DocId* prev_doc,
                   const uint32_t* prev_pos) {
  constexpr uint64_t kMax = std::numeric_limits<uint32_t>::max();
  const uint64_t doc_delta = in.get_varint();
  const uint64_t base = prev_doc ? *prev_doc : 0;
  if (doc_delta > kMax - base) in.fail("document id overflow");
  *doc = static_cast<DocId>(base + doc_delta);
  const uint64_t pos_value = in.get_varint();
  if (prev_doc && doc_delta == 0) {
    if (pos_value > kMax - *prev_pos) in.fail("position overflow");
    *pos = static_cast<uint32_t>(*prev_pos + pos_value);
  } else {
    if (pos_value > kMax) in.fail("position overflow");
    *pos = static_cast<uint32_t>(pos_value);
  }
}

int32_t read_distance(ByteReader& in) {
  const int64_t d = in.get_zigzag();
  if (d < std::numeric_limits<int32_t>::min() || d > std::numeric_limits<int32_t>::max()) {
    in.fail("distance overflow");
  }
  return static_cast<int32_t>(d);
}

}  // namespace

void write_posting(ByteWriter& out, const Posting& p, const Posting* prev) {
  write_location(out, p.doc, p.pos, prev ? &prev->doc : nullptr, prev ? &prev->pos : nullptr);
  out.put_zigzag(p.d1);
  out.put_zigzag(p.d2);
}

Posting read_posting(ByteReader& in, const Posting* prev) {
  Posting p;
  read_location(in, &p.doc, &p.pos, prev ? &prev->doc : nullptr, prev ? &prev->pos : nullptr);
  p.d1 = read_distance(in);
  p.d2 = read_distance(in);
  if (prev && !(*prev < p)) in.fail("postings out of order");
  return p;
}

void write_ordinary_posting(ByteWriter& out, const OrdinaryPosting& p,
                            const OrdinaryPosting* prev) {
  PROXIKEY_CHECK(!prev || *prev < p, "ordinary postings must be strictly increasing");
  write_location(out, p.doc, p.pos, prev ? &prev->doc : nullptr, prev ? &prev->pos : nullptr);
}

OrdinaryPosting read_ordinary_posting(ByteReader& in, const OrdinaryPosting* prev) {
  OrdinaryPosting p;
  read_location(in, &p.doc, &p.pos, prev ? &prev->doc : nullptr, prev ? &prev->pos : nullptr);
  if (prev && !(*prev < p)) in.fail("postings out of order");
  return p;
}

std::vector<uint8_t> encode_posting_block(std::span<const Posting> postings) {
  ByteWriter out;
  const Posting* prev = nullptr;
  for (const auto& p : postings) {
    PROXIKEY_CHECK(!prev || *prev < p, "tri-key postings must be strictly increasing");
    write_posting(out, p, prev);
    prev = &p;
  }
  return out.take();
}

std::vector<Posting> decode_posting_block(std::span<const uint8_t> block,
                                          const std::string& context, size_t base_offset) {
  ByteReader in(block, context, base_offset);
  std::vector<Posting> out;
  while (!in.at_end()) out.push_back(read_posting(in, out.empty() ? nullptr : &out.back()));
  return out;
}

std::vector<uint8_t> encode_ordinary_block(std::span<const OrdinaryPosting> postings) {
  ByteWriter out;
  const OrdinaryPosting* prev = nullptr;
  for (const auto& p : postings) {
    write_ordinary_posting(out, p, prev);
    prev = &p;
  }
  return out.take();
}

std::vector<OrdinaryPosting> decode_ordinary_block(std::span<const uint8_t> block,
                                                   const std::string& context,
                                                   size_t base_offset) {
  ByteReader in(block, context, base_offset);
  std::vector<OrdinaryPosting> out;
  while (!in.at_end()) {
    out.push_back(read_ordinary_posting(in, out.empty() ? nullptr : &out.back()));
  }
  return out;
}

}  // namespace proxikey::index
