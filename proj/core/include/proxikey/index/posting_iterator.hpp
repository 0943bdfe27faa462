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

#include "proxikey/binary.hpp"
#include "proxikey/index/posting.hpp"

namespace proxikey::index {

/// Forward cursor over one tri-key posting list, decoding on the fly.
///
/// A default-constructed iterator, or one over an absent key, is exhausted
/// from the start. value() is meaningless once exhausted. Every posting that
/// becomes the current value is counted in postings_read().
class TriPostingIterator {
 public:
  TriPostingIterator() = default;
  TriPostingIterator(TriKey key, std::span<const uint8_t> block, uint64_t count,
                     std::string context, size_t base_offset);

  const TriKey& key() const { return key_; }
  const Posting& value() const { return value_; }
  bool exhausted() const { return exhausted_; }
  void next();

  uint64_t size() const { return count_; }
  uint64_t postings_read() const { return read_; }

 private:
  TriKey key_;
  ByteReader reader_{{}, {}};
  Posting value_;
  uint64_t count_ = 0;
  uint64_t read_ = 0;
  bool exhausted_ = true;
};

/// Forward cursor over one lemma's ordinary positional list.
class OrdinaryPostingIterator {
 public:
  OrdinaryPostingIterator() = default;
  OrdinaryPostingIterator(LemmaId lemma, std::span<const uint8_t> blocks, uint64_t count,
                          std::string context, size_t base_offset);

  LemmaId lemma() const { return lemma_; }
  const OrdinaryPosting& value() const { return value_; }
  bool exhausted() const { return exhausted_; }
  void next();

  uint64_t size() const { return count_; }
  uint64_t postings_read() const { return read_; }

 private:
  void open_block();

  LemmaId lemma_ = 0;
  ByteReader blocks_{{}, {}};
  ByteReader block_{{}, {}};
  uint64_t block_left_ = 0;
  OrdinaryPosting value_;
  uint64_t count_ = 0;
  uint64_t read_ = 0;
  bool exhausted_ = true;
};

}  // namespace proxikey::index
