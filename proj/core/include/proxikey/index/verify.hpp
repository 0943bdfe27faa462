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

#include "proxikey/index/index_reader.hpp"

namespace proxikey::index {

struct VerifyOptions {
  /// Corpora with at most this many tokens are also compared against the
  /// brute-force tri-key enumeration.
  uint64_t oracle_token_limit = 200'000;
  /// Stop listing problems after this many.
  size_t max_problems = 100;
};

struct VerifyReport {
  std::vector<std::string> problems;
  uint64_t tri_keys = 0;
  uint64_t tri_postings = 0;
  uint64_t ordinary_postings = 0;
  bool oracle_compared = false;

  bool ok() const { return problems.empty(); }
};

/// Opens the index (magic, version, checksums, catalog layout) and checks it.
/// Never throws for a damaged index; failures become problems.
VerifyReport verify_index(const std::filesystem::path& dir, const VerifyOptions& options = {});

/// Checks an open index:
///   - ordinary lists decode, are strictly increasing and stay inside their
///     documents;
///   - every tri-key is an FL-ordered triple of stop lemmas;
///   - every posting satisfies the distance and duplicate rules, and the text
///     holds the key's lemmas at P, P+D1 and P+D2;
///   - for small corpora, the tri-key lists equal the brute-force enumeration.
VerifyReport verify_index(const Index& index, const VerifyOptions& options = {});

}  // namespace proxikey::index
