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

#include "proxikey/binary.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>
#include <zlib.h>

#include "proxikey/error.hpp"

namespace proxikey {

void ByteWriter::put_u32(uint32_t v) {
  for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_u64(uint64_t v) {
  for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_varint(uint64_t v) {
  while (v >= 0x80) {
    bytes_.push_back(static_cast<uint8_t>(v | 0x80));
    v >>= 7;
  }
  bytes_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::put_bytes(std::span<const uint8_t> data) {
  bytes_.insert(bytes_.end(), data.begin(), data.end());
}

void ByteWriter::put_string(std::string_view s) {
  put_u32(static_cast<uint32_t>(s.size()));
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  bytes_.insert(bytes_.end(), p, p + s.size());
}

void ByteReader::fail(std::string_view what) const {
  throw FormatError(fmt::format("{}: {} at offset {}", context_, what, offset()));
}

void ByteReader::need(size_t n) {
  if (remaining() < n) fail("truncated data");
}

uint8_t ByteReader::get_u8() {
  need(1);
  return bytes_[pos_++];
}

uint32_t ByteReader::get_u32() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(bytes_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

uint64_t ByteReader::get_u64() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(bytes_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

uint64_t ByteReader::get_varint() {
  uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    if (at_end()) fail("truncated varint");
    const uint8_t b = bytes_[pos_++];
    v |= static_cast<uint64_t>(b & 0x7f) << shift;
    if ((b & 0x80) == 0) return v;
  }
  fail("overlong varint");
}

std::span<const uint8_t> ByteReader::get_bytes(size_t n) {
  need(n);
  auto out = bytes_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::string ByteReader::get_string() {
  const uint32_t n = get_u32();
  auto raw = get_bytes(n);
  return std::string(raw.begin(), raw.end());
}

uint32_t crc32(std::span<const uint8_t> data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large inputs in pieces.
  while (!data.empty()) {
    const size_t n = std::min<size_t>(data.size(), 1u << 30);
    crc = ::crc32(crc, data.data(), static_cast<uInt>(n));
    data = data.subspan(n);
  }
  return static_cast<uint32_t>(crc);
}

ByteWriter begin_sealed(const Magic& magic, uint32_t version) {
  ByteWriter w;
  w.put_bytes(magic);
  w.put_u32(version);
  return w;
}

std::vector<uint8_t> finish_sealed(ByteWriter&& writer) {
  const uint32_t crc = crc32(writer.bytes());
  writer.put_u32(crc);
  return writer.take();
}

std::span<const uint8_t> open_sealed(std::span<const uint8_t> file, const Magic& magic,
                                     uint32_t version, const std::string& name) {
  if (file.size() < kSealedHeaderSize + 4) {
    throw FormatError(fmt::format("{}: file too short ({} bytes)", name, file.size()));
  }
  if (!std::equal(magic.begin(), magic.end(), file.begin())) {
    throw FormatError(fmt::format("{}: bad magic", name));
  }
  ByteReader header(file.subspan(4, 4), name, 4);
  const uint32_t found = header.get_u32();
  if (found != version) {
    throw FormatError(fmt::format("{}: unsupported version {} (expected {})", name, found, version));
  }
  const auto body = file.first(file.size() - 4);
  ByteReader trailer(file.last(4), name, file.size() - 4);
  const uint32_t stored = trailer.get_u32();
  const uint32_t actual = crc32(body);
  if (stored != actual) {
    throw FormatError(fmt::format("{}: checksum mismatch (stored {:08x}, computed {:08x})", name,
                                  stored, actual));
  }
  return body.subspan(kSealedHeaderSize);
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  in.seekg(0, std::ios::end);
  const auto size = static_cast<size_t>(in.tellg());
  in.seekg(0, std::ios::beg);
  std::vector<uint8_t> bytes(size);
  if (size > 0 && !in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size))) {
    throw IoError(fmt::format("cannot read '{}'", path.string()));
  }
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot create '{}'", path.string()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
}

}  // namespace proxikey
