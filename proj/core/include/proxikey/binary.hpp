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

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proxikey {

// Little-endian fixed-width integers, base-128 varints (low group first,
// high bit = continuation) and zigzag-mapped signed values.

inline uint64_t zigzag_encode(int64_t v) {
  return (static_cast<uint64_t>(v) << 1) ^ static_cast<uint64_t>(v >> 63);
}

inline int64_t zigzag_decode(uint64_t v) {
  return static_cast<int64_t>(v >> 1) ^ -static_cast<int64_t>(v & 1);
}

class ByteWriter {
 public:
  void put_u8(uint8_t v) { bytes_.push_back(v); }
  void put_u32(uint32_t v);
  void put_u64(uint64_t v);
  void put_varint(uint64_t v);
  void put_zigzag(int64_t v) { put_varint(zigzag_encode(v)); }
  void put_bytes(std::span<const uint8_t> data);
  /// u32 length prefix followed by the raw bytes.
  void put_string(std::string_view s);

  size_t size() const { return bytes_.size(); }
  const std::vector<uint8_t>& bytes() const { return bytes_; }
  std::vector<uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<uint8_t> bytes_;
};

/// Bounds-checked cursor. Every read past the end throws FormatError naming
/// `context` and the failing offset.
class ByteReader {
 public:
  ByteReader(std::span<const uint8_t> bytes, std::string context, size_t base_offset = 0)
      : bytes_(bytes), context_(std::move(context)), base_(base_offset) {}

  uint8_t get_u8();
  uint32_t get_u32();
  uint64_t get_u64();
  uint64_t get_varint();
  int64_t get_zigzag() { return zigzag_decode(get_varint()); }
  std::span<const uint8_t> get_bytes(size_t n);
  std::string get_string();

  bool at_end() const { return pos_ == bytes_.size(); }
  size_t remaining() const { return bytes_.size() - pos_; }
  /// Offset relative to the start of the enclosing file.
  size_t offset() const { return base_ + pos_; }
  const std::string& context() const { return context_; }

  [[noreturn]] void fail(std::string_view what) const;

 private:
  void need(size_t n);

  std::span<const uint8_t> bytes_;
  std::string context_;
  size_t base_ = 0;
  size_t pos_ = 0;
};

uint32_t crc32(std::span<const uint8_t> data);

// Sealed files: 4-byte magic, u32 version, payload, u32 CRC-32 of all
// preceding bytes.

using Magic = std::array<uint8_t, 4>;

ByteWriter begin_sealed(const Magic& magic, uint32_t version);
std::vector<uint8_t> finish_sealed(ByteWriter&& writer);

/// Validates magic, version and checksum; returns the payload span.
std::span<const uint8_t> open_sealed(std::span<const uint8_t> file, const Magic& magic,
                                     uint32_t version, const std::string& name);

/// Offset of the payload inside a sealed file.
inline constexpr size_t kSealedHeaderSize = 8;

std::vector<uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes);

}  // namespace proxikey
