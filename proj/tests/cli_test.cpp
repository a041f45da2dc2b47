// Copyright 2026 The approxcore Authors.
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

#include "approxcore/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace approxcore {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("approxcore_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string Read(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int Run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  json OutJson() { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

constexpr const char* kK3 = "p mg 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n";

TEST_F(CliTest, SolveTriangleJson) {
  ASSERT_EQ(Run({"solve", Write("k3.mg", kK3), "--json"}), 0) << err_.str();
  const json j = OutJson();
  EXPECT_EQ(j["values"], json({"1/3", "1/3", "1/3"}));
  EXPECT_EQ(j["factor_guarantee"], "2/3");
  EXPECT_EQ(j["factors"], json({"2/3", "2/3", "2/3"}));
  EXPECT_EQ(j["allocated"], "1");
  EXPECT_EQ(j["matching_weight"], "1");
  EXPECT_EQ(j["fractional_optimum"], "3/2");
  EXPECT_EQ(j["matching"].size(), 1u);
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(CliTest, SolveSingleEdgeWithCheck) {
  ASSERT_EQ(Run({"solve", Write("e5.mg", "p mg 2 1\ne 1 2 5\n"), "--json", "--check"}), 0);
  const json j = OutJson();
  Money total = 0;
  for (const auto& v : j["values"]) total += *parse_money(v.get<std::string>());
  EXPECT_EQ(total, 5);
  EXPECT_EQ(j["matching"], json::parse("[[1,2]]"));
}

TEST_F(CliTest, SolveTable) {
  ASSERT_EQ(Run({"solve", Write("k3.mg", kK3)}), 0);
  EXPECT_NE(out_.str().find("factor guarantee 2/3"), std::string::npos);
}

TEST_F(CliTest, SolveMalformed) {
  EXPECT_EQ(Run({"solve", Write("bad.mg", "p mg 3 2\ne 1 2 1\ne 1 2 2\n")}), 2);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
  EXPECT_TRUE(out_.str().empty());
  EXPECT_EQ(Run({"solve", (dir_ / "missing.mg").string()}), 2);
  EXPECT_EQ(Run({"solve"}), 2);
  EXPECT_EQ(Run({"frobnicate"}), 2);
}

TEST_F(CliTest, VerifyTriangle) {
  const std::string k3 = Write("k3.mg", kK3);
  const std::string imp = Write("imp.json", R"({"values": ["1/3", "1/3", "1/3"]})");
  ASSERT_EQ(Run({"verify", k3, imp, "--alpha", "2/3", "--mode", "exhaustive"}), 0);
  EXPECT_EQ(OutJson()["checked_count"], 8);
  EXPECT_EQ(OutJson()["passed"], true);

  EXPECT_EQ(Run({"verify", k3, imp, "--alpha", "3/4"}), 1);
  EXPECT_EQ(OutJson()["violation_count"], 3);

  const std::string cover = Write("cover.json", R"({"values": ["1/2", "1/2", "1/2"]})");
  EXPECT_EQ(Run({"verify", k3, cover, "--alpha", "1", "--mode", "exhaustive"}), 1);
  EXPECT_EQ(OutJson()["budget_ok"], false);

  EXPECT_EQ(Run({"verify", k3, imp, "--alpha", "2/3", "--mode", "edges"}), 0);
  EXPECT_EQ(OutJson()["checked_count"], 6);
}

TEST_F(CliTest, VerifyUsageErrors) {
  const std::string k3 = Write("k3.mg", kK3);
  const std::string imp = Write("imp.json", R"({"values": ["1/3", "1/3", "1/3"]})");
  EXPECT_EQ(Run({"verify", k3, imp, "--alpha", "0"}), 2);
  EXPECT_EQ(Run({"verify", k3, imp, "--alpha", "5/4"}), 2);
  EXPECT_EQ(Run({"verify", k3, imp, "--alpha", "0.5"}), 2);
  EXPECT_EQ(Run({"verify", k3, imp, "--mode", "some"}), 2);
  EXPECT_EQ(Run({"verify", k3, Write("short.json", R"({"values": ["1"]})")}), 2);
  EXPECT_EQ(Run({"verify", k3, Write("junk.json", "{nope")}), 2);
  EXPECT_EQ(Run({"verify", k3, Write("bad.json", R"({"values": ["x"]})")}), 2);
}

TEST_F(CliTest, VerifyBoundExceeded) {
  ASSERT_EQ(Run({"gen", "random", "--n", "30", "--p", "1/4", "--seed", "1", "-o",
                 (dir_ / "big.mg").string()}),
            0);
  json zeros = {{"values", std::vector<std::string>(30, "0")}};
  const std::string imp = Write("imp.json", zeros.dump());
  EXPECT_EQ(Run({"verify", (dir_ / "big.mg").string(), imp, "--mode", "exhaustive",
                 "--max-n", "20"}),
            3);
}

TEST_F(CliTest, GenFamilies) {
  const std::string gap3 = (dir_ / "g3.mg").string();
  ASSERT_EQ(Run({"gen", "gap", "--n", "3", "-o", gap3}), 0);
  EXPECT_EQ(parse_instance(Read(gap3)).vertex_count(), 18u);
  EXPECT_NE(out_.str().find("18 vertices"), std::string::npos);

  ASSERT_EQ(Run({"gen", "cycle", "--k", "2", "--weight", "1"}), 0);
  EXPECT_EQ(parse_instance(out_.str()), gen_odd_cycle(2, 1));
  EXPECT_FALSE(err_.str().empty());  // summary goes to stderr when stdout has data

  const std::string a = (dir_ / "a.mg").string(), b = (dir_ / "b.mg").string();
  ASSERT_EQ(Run({"gen", "random", "--n", "10", "--p", "1/2", "--seed", "7", "-o", a}), 0);
  ASSERT_EQ(Run({"gen", "random", "--n", "10", "--p", "1/2", "--seed", "7", "-o", b}), 0);
  EXPECT_EQ(Read(a), Read(b));

  EXPECT_EQ(Run({"gen", "gap", "--n", "0"}), 2);
  EXPECT_EQ(Run({"gen", "cycle", "--k", "0"}), 2);
  EXPECT_EQ(Run({"gen", "random", "--n", "4", "--p", "3/2"}), 2);
  EXPECT_EQ(Run({"gen"}), 2);
}

TEST_F(CliTest, Gap) {
  ASSERT_EQ(Run({"gen", "gap", "--n", "1", "-o", (dir_ / "g1.mg").string()}), 0);
  ASSERT_EQ(Run({"gap", (dir_ / "g1.mg").string()}), 0);
  EXPECT_EQ(OutJson(), json::parse(R"({"opt_integral":"2","opt_fractional":"3",
                                        "ratio":"2/3","core_nonempty":false})"));

  ASSERT_EQ(Run({"gap", Write("e5.mg", "p mg 2 1\ne 1 2 5\n")}), 0);
  EXPECT_EQ(OutJson()["ratio"], "1");
  EXPECT_EQ(OutJson()["core_nonempty"], true);

  ASSERT_EQ(Run({"gap", Write("k3.mg", kK3)}), 0);
  EXPECT_EQ(OutJson()["ratio"], "2/3");
}

TEST_F(CliTest, GapRefusal) {
  const std::string k12 = (dir_ / "k12.mg").string();
  ASSERT_EQ(Run({"gen", "random", "--n", "12", "--p", "1", "-o", k12}), 0);
  EXPECT_EQ(Run({"gap", k12}), 3);
  const json j = OutJson();
  EXPECT_TRUE(j["opt_integral"].is_null());
  EXPECT_EQ(j["core_nonempty"], "unknown");
  EXPECT_FALSE(j["opt_fractional"].is_null());
  EXPECT_EQ(Run({"gap", k12, "--brute-max-edges", "66"}), 0);
}

}  // namespace
}  // namespace approxcore
