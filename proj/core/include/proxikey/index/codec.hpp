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
#include <span>
#include <string>
#include <vector>

#include "proxikey/binary.hpp"
#include "proxikey/index/posting.hpp"

namespace proxikey::index {

// Posting block encoding. Each record is
//   varint(doc - previous doc)
//   varint(pos) when the doc changed (or first record), else varint(pos - previous pos)
//   zigzag varint d1, zigzag varint d2          (tri-key blocks only)
// Blocks carry no count; they end where their byte range ends.

void write_posting(ByteWriter& out, const Posting& p, const Posting* prev);
/// Reads the record that follows `prev` (nullptr for the first record of a
/// block). Throws FormatError on truncation or when records are not strictly
/// increasing.
Posting read_posting(ByteReader& in, const Posting* prev);

void write_ordinary_posting(ByteWriter& out, const OrdinaryPosting& p,
                            const OrdinaryPosting* prev);
OrdinaryPosting read_ordinary_posting(ByteReader& in, const OrdinaryPosting* prev);

std::vector<uint8_t> encode_posting_block(std::span<const Posting> postings);
std::vector<Posting> decode_posting_block(std::span<const uint8_t> block,
                                          const std::string& context = "posting block",
                                          size_t base_offset = 0);

std::vector<uint8_t> encode_ordinary_block(std::span<const OrdinaryPosting> postings);
std::vector<OrdinaryPosting> decode_ordinary_block(std::span<const uint8_t> block,
                                                   const std::string& context = "ordinary block",
                                                   size_t base_offset = 0);

}  // namespace proxikey::index
