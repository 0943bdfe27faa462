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

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace proxikey {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or truncated on-disk data.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// File system failure, always carrying the offending path in what().
class IoError : public Error {
 public:
  using Error::Error;
};

/// The query falls outside the class this engine evaluates (stop-only,
/// two or more words, at most 16 words).
class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void check_failed(const char* expr, const char* file, int line,
                                      const std::string& message) {
  std::fprintf(stderr, "%s:%d: invariant violated: %s (%s)\n", file, line, expr,
               message.c_str());
  std::abort();
}

}  // namespace proxikey

// Internal invariants; a failure is a bug, never a data error.
#define PROXIKEY_CHECK(expr, message)                                  \
  do {                                                                 \
    if (!(expr)) {                                                     \
      ::proxikey::check_failed(#expr, __FILE__, __LINE__, (message)); \
    }                                                                  \
  } while (false)
