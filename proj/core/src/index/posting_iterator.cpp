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

#include "proxikey/index/posting_iterator.hpp"

#include "proxikey/index/codec.hpp"

namespace proxikey::index {

TriPostingIterator::TriPostingIterator(TriKey key, std::span<const uint8_t> block, uint64_t count,
                                       std::string context, size_t base_offset)
    : key_(key), reader_(block, std::move(context), base_offset), count_(count) {
  exhausted_ = false;
  if (reader_.at_end()) {
    if (count_ != 0) reader_.fail("posting list shorter than its catalog count");
    exhausted_ = true;
    return;
  }
  value_ = read_posting(reader_, nullptr);
  if (++read_ > count_) reader_.fail("posting list longer than its catalog count");
}

void TriPostingIterator::next() {
  if (exhausted_) return;
  if (reader_.at_end()) {
    if (read_ != count_) reader_.fail("posting list length disagrees with catalog count");
    exhausted_ = true;
    return;
  }
  const Posting prev = value_;
  value_ = read_posting(reader_, &prev);
  if (++read_ > count_) reader_.fail("posting list longer than its catalog count");
}

OrdinaryPostingIterator::OrdinaryPostingIterator(LemmaId lemma, std::span<const uint8_t> blocks,
                                                 uint64_t count, std::string context,
                                                 size_t base_offset)
    : lemma_(lemma), blocks_(blocks, std::move(context), base_offset), count_(count) {
  exhausted_ = false;
  if (blocks_.at_end()) {
    if (count_ != 0) blocks_.fail("ordinary list shorter than its directory count");
    exhausted_ = true;
    return;
  }
  open_block();
  value_ = read_ordinary_posting(block_, nullptr);
  --block_left_;
  ++read_;
}

void OrdinaryPostingIterator::open_block() {
  block_left_ = blocks_.get_varint();
  const uint64_t length = blocks_.get_varint();
  if (block_left_ == 0) blocks_.fail("empty ordinary block");
  if (length > blocks_.remaining()) blocks_.fail("ordinary block overruns list");
  const size_t offset = blocks_.offset();
  block_ = ByteReader(blocks_.get_bytes(static_cast<size_t>(length)), blocks_.context(), offset);
}

void OrdinaryPostingIterator::next() {
  if (exhausted_) return;
  const OrdinaryPosting prev = value_;
  if (block_left_ == 0) {
    if (!block_.at_end()) block_.fail("trailing bytes in ordinary block");
    if (blocks_.at_end()) {
      if (read_ != count_) blocks_.fail("ordinary list length disagrees with directory count");
      exhausted_ = true;
      return;
    }
    open_block();
    // Blocks restart delta coding; order across blocks is still checked.
    value_ = read_ordinary_posting(block_, nullptr);
    if (!(prev < value_)) block_.fail("postings out of order across blocks");
  } else {
    value_ = read_ordinary_posting(block_, &prev);
  }
  --block_left_;
  ++read_;
}

}  // namespace proxikey::index
