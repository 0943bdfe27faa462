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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "proxikey/error.hpp"
#include "proxikey/text/dictionary.hpp"
#include "proxikey/text/tokenizer.hpp"
#include "support.hpp"

namespace proxikey::text {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(Tokenize, AlbumSentence) {
  const auto tokens = tokenize("Who are you is the album by The Who.");
  EXPECT_EQ(surfaces(tokens), (std::vector<std::string>{"who", "are", "you", "is", "the", "album",
                                                        "by", "the", "who"}));
  for (size_t i = 0; i < tokens.size(); ++i) EXPECT_EQ(tokens[i].position, i);
}

TEST(Tokenize, EmptyText) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, SeparatorRuns) {
  const auto tokens = tokenize("a--b  C");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0], (Token{"a", 0}));
  EXPECT_EQ(tokens[1], (Token{"b", 1}));
  EXPECT_EQ(tokens[2], (Token{"c", 2}));
}

TEST(Tokenize, DigitsAndUtf8StayInsideWords) {
  EXPECT_EQ(surfaces(tokenize("R2D2 caf\xc3\xa9, x")),
            (std::vector<std::string>{"r2d2", "caf\xc3\xa9", "x"}));
}

TEST(Tokenize, OnlySeparators) { EXPECT_TRUE(tokenize(" ,.;\n\t\"'").empty()); }

TEST(Tokenize, RejoinedSurfacesRetokenizeIdentically) {
  std::mt19937 rng(7);
  const std::string alphabet = "abcXYZ09 ,.-\n";
  for (int round = 0; round < 200; ++round) {
    std::string text;
    std::uniform_int_distribution<size_t> len(0, 60), pick(0, alphabet.size() - 1);
    for (size_t n = len(rng); n > 0; --n) text += alphabet[pick(rng)];
    const auto tokens = tokenize(text);
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t.surface;
    EXPECT_EQ(tokenize(joined), tokens) << text;
    for (const auto& t : tokens) EXPECT_FALSE(t.surface.empty());
  }
}

TEST(Dictionary, LemmatizeKnownAndUnknown) {
  const auto dict = testing::two_documents_dictionary();
  EXPECT_EQ(dict.lemmatize("are"), (std::vector<std::string>{"are", "be"}));
  EXPECT_EQ(dict.lemmatize("has"), (std::vector<std::string>{"have"}));
  EXPECT_EQ(dict.lemmatize("xyzzy"), (std::vector<std::string>{"xyzzy"}));
  EXPECT_EQ(dict.find("xyzzy"), nullptr);
}

TEST(Dictionary, ParseFileFormat) {
  std::istringstream in("# comment\n\nare\tare, be\nis\tbe\r\ndid\tdo,do\n");
  const auto dict = Dictionary::parse(in, "fixture");
  EXPECT_EQ(dict.size(), 3u);
  EXPECT_EQ(dict.lemmatize("are"), (std::vector<std::string>{"are", "be"}));
  EXPECT_EQ(dict.lemmatize("is"), (std::vector<std::string>{"be"}));
  EXPECT_EQ(dict.lemmatize("did"), (std::vector<std::string>{"do"}));
}

TEST(Dictionary, MalformedLinesReportLineNumbers) {
  std::istringstream missing_tab("are\tbe\nbroken line\n");
  try {
    Dictionary::parse(missing_tab, "dict.txt");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("dict.txt:2"), std::string::npos) << e.what();
  }
  std::istringstream empty_lemmas("word\t , \n");
  EXPECT_THROW(Dictionary::parse(empty_lemmas, "x"), FormatError);
}

TEST(Dictionary, LoadMissingFile) {
  EXPECT_THROW(Dictionary::load("/nonexistent/proxikey.dict"), IoError);
}

TEST(Dictionary, AddDropsDuplicateLemmas) {
  Dictionary dict;
  dict.add("saw", {"see", "saw", "see"});
  EXPECT_EQ(dict.lemmatize("saw"), (std::vector<std::string>{"see", "saw"}));
}

}  // namespace
}  // namespace proxikey::text
