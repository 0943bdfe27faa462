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

#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "config.hpp"
#include "proxikey/error.hpp"
#include "support.hpp"

namespace proxikey::tools {
namespace {

using testing::TempDir;
using testing::write_text;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args, const EnvLookup& env = [](std::string_view) {
  return std::optional<std::string>();
}) {
  args.insert(args.begin(), "proxikey");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err, env);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::filesystem::create_directory(dir_ / "corpus");
    for (const auto& d : testing::two_documents()) write_text(dir_ / "corpus" / d.name, d.text);
    write_text(dir_ / "dict.tsv", "are\tare,be\nis\tbe\nhas\thave\n");
    std::string counts;
    for (const auto& [l, c] : testing::two_documents_counts()) {
      counts += l + "\t" + std::to_string(c) + "\n";
    }
    write_text(dir_ / "counts.tsv", counts);
  }

  std::vector<std::string> global() const {
    return {"--index", (dir_ / "idx").string(), "--dict", (dir_ / "dict.tsv").string()};
  }

  CliRun invoke(std::vector<std::string> args) const {
    auto all = global();
    all.insert(all.end(), args.begin(), args.end());
    return run_cli(all);
  }

  CliRun build() const {
    return invoke({"build", (dir_ / "corpus").string(), "--fl-counts",
                   (dir_ / "counts.tsv").string()});
  }

  TempDir dir_;
};

TEST_F(CliTest, BuildQueryVerify) {
  const auto b = build();
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("docs=2"), std::string::npos);

  const auto q = invoke({"query", "who", "are", "you", "who"});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(q.out.rfind("doc=0 ", 0), 0u);

  const auto v = invoke({"verify"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("verify=ok"), std::string::npos);
  EXPECT_NE(v.out.find("oracle=compared"), std::string::npos);
}

TEST_F(CliTest, BaselineAgrees) {
  ASSERT_EQ(build().code, 0);
  const auto a = invoke({"query", "who", "is"});
  const auto b = invoke({"query", "--baseline", "who", "is"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(lines(a.out).front(), lines(b.out).front());
}

TEST_F(CliTest, OracleCheck) {
  ASSERT_EQ(build().code, 0);
  const auto r = invoke({"oracle-check", "who are you who"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("oracle_check=ok"), std::string::npos);
}

TEST_F(CliTest, UnsupportedQueryExitsTwo) {
  ASSERT_EQ(build().code, 0);
  const auto r = invoke({"query", "reality"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unsupported query"), std::string::npos);
}

TEST_F(CliTest, CorruptIndexExitsThree) {
  ASSERT_EQ(build().code, 0);
  const auto tri = dir_ / "idx" / "trikey.idx";
  ASSERT_TRUE(std::filesystem::exists(tri));
  auto bytes = testing::read_text(tri);
  bytes[bytes.size() / 2] ^= 0x5a;
  write_text(tri, bytes);
  const auto r = invoke({"verify"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("verify=failed"), std::string::npos);
}

TEST_F(CliTest, MissingIndexExitsOne) {
  const auto r = invoke({"query", "who", "is"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(CliEmpty, NoMatchingKeysPrintsNoResults) {
  TempDir dir;
  std::filesystem::create_directory(dir / "corpus");
  write_text(dir / "corpus" / "a.txt", "alpha beta");
  write_text(dir / "dict.tsv", "");
  const std::vector<std::string> g = {"--index", (dir / "idx").string(), "--dict",
                                      (dir / "dict.tsv").string()};
  auto args = g;
  args.insert(args.end(), {"build", (dir / "corpus").string()});
  ASSERT_EQ(run_cli(args).code, 0);
  args = g;
  args.insert(args.end(), {"query", "alpha", "beta"});
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "postings_read=0\n");
}

TEST_F(CliTest, BadFlagExitsOne) { EXPECT_EQ(run_cli({"query"}).code, 1); }

TEST_F(CliTest, WindowSizeBelowTwiceMaxDistance) {
  ASSERT_EQ(build().code, 0);
  EXPECT_EQ(invoke({"query", "--window-size", "9", "who", "is"}).code, 1);
  EXPECT_EQ(invoke({"query", "--window-size", "10", "who", "is"}).code, 0);
}

TEST(CliTrace, IncrementalExample) {
  TempDir dir;
  std::filesystem::create_directory(dir / "corpus");
  const auto doc = testing::trace_document().front();
  write_text(dir / "corpus" / doc.name, doc.text);
  write_text(dir / "dict.tsv", "");
  write_text(dir / "counts.tsv", "i\t100\nyou\t90\nneed\t80\nwho\t70\n");
  const std::vector<std::string> g = {"--index", (dir / "idx").string(), "--dict",
                                      (dir / "dict.tsv").string()};
  auto args = g;
  for (const char* a : {"build", "", "-M", "7", "--fl-counts", ""}) args.emplace_back(a);
  args[g.size() + 1] = (dir / "corpus").string();
  args.back() = (dir / "counts.tsv").string();
  ASSERT_EQ(run_cli(args).code, 0);

  args = g;
  for (const char* a : {"query", "--trace", "--window-size", "14", "--trace-start", "4", "who",
                        "i", "need", "you"}) {
    args.emplace_back(a);
  }
  const auto r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::vector<std::string> expected = {
      "Shift Start=4",
      "Read posting (19, 20, 15) key (i, need, who)",
      "Set (position 19, key i), buffer 1",
      "Set (position 20, key need), buffer 1",
      "Set (position 15, key who), buffer 0",
      "Read posting (21, 20, 15) key (you, need*, who*)",
      "Set (position 21, key you), buffer 1",
      "Read posting (21, 20, 28) key (you, need*, who*)",
      "Set (position 21, key you), buffer 1",
      "Read posting (22, 20, 15) key (you, need*, who*)",
      "Set (position 22, key you), buffer 1",
      "Read posting (22, 20, 28) key (you, need*, who*)",
      "Set (position 22, key you), buffer 1",
      "Populate Source",
      "Fetch (position 15, key who)",
      "Add (key who) Count!=Max",
      "Buffer switch, Start=18",
      "Populate Source",
      "Fetch (position 19, key i)",
      "Add (key i) Count!=Max",
      "Fetch (position 20, key need)",
      "Add (key need) Count!=Max",
      "Fetch (position 21, key you)",
      "Add (key you) Count=Max",
      "Result (from 15, to 21)",
  };
  const auto got = lines(r.out);
  ASSERT_GE(got.size(), expected.size());
  EXPECT_EQ(std::vector<std::string>(got.begin(), got.begin() + expected.size()), expected);
}

TEST(Config, PrecedenceFileEnvFlag) {
  TempDir dir;
  write_text(dir / "px.conf", "# settings\nmax_distance = 4\nwindow_size = 20\nsw_count=50\n");
  auto env = [](std::string_view name) -> std::optional<std::string> {
    if (name == "PROXIKEY_WINDOW_SIZE") return "30";
    return std::nullopt;
  };
  const Config c = load_config(dir / "px.conf", env);
  EXPECT_EQ(c.max_distance, 4u);
  EXPECT_EQ(c.sw_count, 50u);
  EXPECT_EQ(c.window_size, 30u);
  EXPECT_EQ(c.fu_count, 2100u);
}

TEST(Config, FlagsBeatEnvironment) {
  TempDir dir;
  std::filesystem::create_directory(dir / "corpus");
  write_text(dir / "corpus" / "a.txt", "a b c a b c");
  write_text(dir / "dict.tsv", "");
  auto env = [&](std::string_view name) -> std::optional<std::string> {
    if (name == "PROXIKEY_MAX_DISTANCE") return "0";
    if (name == "PROXIKEY_INDEX") return (dir / "idx").string();
    if (name == "PROXIKEY_DICTIONARY") return (dir / "dict.tsv").string();
    return std::nullopt;
  };
  EXPECT_EQ(run_cli({"build", (dir / "corpus").string()}, env).code, 1);
  EXPECT_EQ(run_cli({"build", (dir / "corpus").string(), "-M", "2"}, env).code, 0);
}

TEST(Config, MalformedInputs) {
  TempDir dir;
  write_text(dir / "bad.conf", "max_distance 4\n");
  EXPECT_THROW(read_config_file(dir / "bad.conf"), Error);
  Config c;
  EXPECT_THROW(apply_setting(c, "colour", "red", "test"), Error);
  EXPECT_THROW(apply_setting(c, "max_distance", "x", "test"), Error);
  c.max_distance = 40;
  EXPECT_THROW(validate(c), Error);
}

TEST(Bench, SmallRunReportsFactor) {
  const auto r = run_cli({"bench", "--docs", "200", "--vocab", "300", "--queries", "20"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("reduction_factor="), std::string::npos);
  EXPECT_NE(r.out.find("mismatches=0"), std::string::npos);
}

}  // namespace
}  // namespace proxikey::tools
