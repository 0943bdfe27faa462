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

#include <gtest/gtest.h>

#include "proxikey/binary.hpp"
#include "proxikey/error.hpp"
#include "proxikey/index/codec.hpp"
#include "support.hpp"

namespace proxikey::index {
namespace {

const std::vector<Posting> kBeWhoWho = {
    {0, 3, -3, 5}, {1, 4, -4, -1}, {1, 4, -4, 2}, {1, 4, -1, 2}, {1, 7, -4, -1}};

TEST(Zigzag, SmallMagnitudesStaySmall) {
  EXPECT_EQ(zigzag_encode(0), 0u);
  EXPECT_EQ(zigzag_encode(-1), 1u);
  EXPECT_EQ(zigzag_encode(1), 2u);
  EXPECT_EQ(zigzag_encode(-2), 3u);
  for (int64_t v : {int64_t{0}, int64_t{-7}, int64_t{7}, INT64_MIN, INT64_MAX}) {
    EXPECT_EQ(zigzag_decode(zigzag_encode(v)), v);
  }
}

TEST(Varint, RoundTripAndLength) {
  ByteWriter w;
  w.put_varint(0);
  w.put_varint(127);
  w.put_varint(128);
  w.put_varint(UINT64_MAX);
  EXPECT_EQ(w.size(), 1u + 1u + 2u + 10u);
  ByteReader r(w.bytes(), "test");
  EXPECT_EQ(r.get_varint(), 0u);
  EXPECT_EQ(r.get_varint(), 127u);
  EXPECT_EQ(r.get_varint(), 128u);
  EXPECT_EQ(r.get_varint(), UINT64_MAX);
  EXPECT_TRUE(r.at_end());
}

TEST(Varint, TruncationNamesContextAndOffset) {
  const std::vector<uint8_t> bytes = {0x05, 0x80};
  ByteReader r(bytes, "blob", 100);
  EXPECT_EQ(r.get_varint(), 5u);
  try {
    r.get_varint();
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("blob"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("offset 102"), std::string::npos) << e.what();
  }
}

TEST(Sealed, ChecksumAndMagic) {
  ByteWriter w = begin_sealed({'T', 'E', 'S', 'T'}, 3);
  w.put_u64(42);
  const auto file = finish_sealed(std::move(w));
  const auto payload = open_sealed(file, {'T', 'E', 'S', 'T'}, 3, "f");
  EXPECT_EQ(payload.size(), 8u);
  EXPECT_THROW(open_sealed(file, {'N', 'O', 'P', 'E'}, 3, "f"), FormatError);
  EXPECT_THROW(open_sealed(file, {'T', 'E', 'S', 'T'}, 4, "f"), FormatError);
  auto damaged = file;
  damaged[9] ^= 0x40;
  EXPECT_THROW(open_sealed(damaged, {'T', 'E', 'S', 'T'}, 3, "f"), FormatError);
}

TEST(PostingBlock, Empty) {
  const auto block = encode_posting_block({});
  EXPECT_TRUE(block.empty());
  EXPECT_TRUE(decode_posting_block(block).empty());
}

TEST(PostingBlock, KnownListRoundTrips) {
  EXPECT_EQ(decode_posting_block(encode_posting_block(kBeWhoWho)), kBeWhoWho);
}

TEST(PostingBlock, LayoutIsDeltaCoded) {
  const std::vector<Posting> two = {{5, 300, -1, 2}, {5, 310, 1, 3}};
  // doc 5, pos 300 (two bytes), zigzag(-1)=1, zigzag(2)=4, doc delta 0,
  // pos delta 10, zigzag(1)=2, zigzag(3)=6.
  const std::vector<uint8_t> expected = {5, 0xAC, 0x02, 1, 4, 0, 10, 2, 6};
  EXPECT_EQ(encode_posting_block(two), expected);
}

TEST(PostingBlock, RandomRoundTrip) {
  const auto postings = testing::random_postings(10'000, 11);
  EXPECT_EQ(decode_posting_block(encode_posting_block(postings)), postings);
}

TEST(PostingBlock, TruncatedBlockFails) {
  const auto block = encode_posting_block(kBeWhoWho);
  for (size_t cut = 1; cut < block.size(); ++cut) {
    const auto prefix = std::span(block).first(cut);
    // Some cuts land on a record boundary and decode a shorter list; the rest
    // must fail loudly rather than invent data.
    try {
      const auto decoded = decode_posting_block(prefix);
      ASSERT_LT(decoded.size(), kBeWhoWho.size());
      EXPECT_TRUE(std::equal(decoded.begin(), decoded.end(), kBeWhoWho.begin()));
    } catch (const FormatError&) {
    }
  }
  EXPECT_THROW(decode_posting_block(std::span(block).first(block.size() - 1)), FormatError);
}

TEST(PostingBlock, OutOfOrderRecordsFail) {
  ByteWriter w;
  const Posting a{1, 5, 1, 2};
  write_posting(w, a, nullptr);
  // Same doc, zero position delta, smaller distances.
  w.put_varint(0);
  w.put_varint(0);
  w.put_zigzag(-1);
  w.put_zigzag(2);
  EXPECT_THROW(decode_posting_block(w.bytes()), FormatError);
}

TEST(OrdinaryBlock, RoundTrip) {
  const std::vector<OrdinaryPosting> list = {{0, 0}, {0, 8}, {3, 1}, {3, 2}, {90, 70000}};
  EXPECT_EQ(decode_ordinary_block(encode_ordinary_block(list)), list);
}

}  // namespace
}  // namespace proxikey::index
