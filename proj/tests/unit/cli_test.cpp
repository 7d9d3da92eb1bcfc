// Copyright 2026 The BOLT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace bolt::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bolt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    path3_ = write("path3.txt", "# a path\na b\nb c\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  fs::path dir_;
  std::string path3_;
};

TEST_F(CliTest, ExactCsvGolden) {
  const auto r = call({"exact", "--file", path3_, "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "node_label,betweenness\na,0\nb,2\nc,0\n");
  EXPECT_NE(r.err.find("exact: instance=path3 nodes=3 edges=2 seed=1"), std::string::npos);
}

TEST_F(CliTest, ExactJson) {
  const auto r = call({"exact", "--file", path3_, "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array() || j.is_object());
  EXPECT_NE(r.out.find("\"b\""), std::string::npos);
}

TEST_F(CliTest, ProbsHeaderAndValues) {
  const auto r = call({"probs", "--file", path3_, "--node", "a", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(first_line(r.out), "node_label,distance,probability,model");
  EXPECT_NE(r.out.find("a,0,0,eddbm"), std::string::npos);
  EXPECT_NE(r.out.find("b,1,0.5714285714285714,eddbm"), std::string::npos);
}

TEST_F(CliTest, ProbsUnreachableDistance) {
  const std::string f = write("split.txt", "a b\nc d\n");
  const auto r = call({"probs", "--file", f, "--node", "a", "--model", "uniform"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("c,inf,"), std::string::npos);
}

TEST_F(CliTest, OptimalSingleSampleEqualsExact) {
  const auto e = call({"estimate", "--file", path3_, "--node", "b", "--model", "optimal",
                       "-T", "1", "--seed", "4"});
  ASSERT_EQ(e.code, kOk) << e.err;
  const auto j = nlohmann::json::parse(e.out);
  EXPECT_EQ(j.at("node"), "b");
  EXPECT_EQ(j.at("estimate").get<double>(), 2.0);
  EXPECT_EQ(j.at("samples"), 1);
  EXPECT_EQ(j.at("model"), "optimal");
  EXPECT_EQ(j.at("seed"), 4);

  // Same check on a generated graph, node by node.
  const auto exact = call({"exact", "--gen", "ba:40:2", "--seed", "9"});
  ASSERT_EQ(exact.code, kOk);
  std::istringstream rows(exact.out);
  std::string line;
  std::getline(rows, line);
  int checked = 0;
  while (std::getline(rows, line) && checked < 10) {
    const auto comma = line.find(',');
    const std::string label = line.substr(0, comma);
    const double bc = std::stod(line.substr(comma + 1));
    const auto est = call({"estimate", "--gen", "ba:40:2", "--seed", "9", "--node", label,
                           "--model", "optimal", "-T", "1"});
    ASSERT_EQ(est.code, kOk) << est.err;
    EXPECT_NEAR(nlohmann::json::parse(est.out).at("estimate").get<double>(), bc,
                1e-7 * (1 + bc))
        << label;
    ++checked;
  }
}

TEST_F(CliTest, SameSeedSameBytes) {
  const std::vector<std::string> args{"estimate", "--gen", "er:300:0.02", "--node", "17",
                                      "--seed", "42", "-T", "10"};
  const auto a = call(args);
  const auto b = call(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto k1 = call({"korder", "--gen", "ba:200:3", "--random-k", "6", "--seed", "5"});
  const auto k2 = call({"korder", "--gen", "ba:200:3", "--random-k", "6", "--seed", "5"});
  ASSERT_EQ(k1.code, kOk) << k1.err;
  EXPECT_EQ(k1.out, k2.out);
}

TEST_F(CliTest, GenerateRoundTripsThroughFile) {
  const auto g = call({"generate", "--gen", "er:50:0.1", "--seed", "3"});
  ASSERT_EQ(g.code, kOk) << g.err;
  EXPECT_EQ(first_line(g.out), "# generator: er:50:0.1");
  EXPECT_NE(g.out.find("# seed: 3\n"), std::string::npos);
  const std::string f = write("gen.txt", g.out);
  const auto from_file = call({"exact", "--file", f});
  const auto from_gen = call({"exact", "--gen", "er:50:0.1", "--seed", "3"});
  ASSERT_EQ(from_file.code, kOk) << from_file.err;
  EXPECT_EQ(from_file.out, from_gen.out);
}

TEST_F(CliTest, OrderJsonHasVerdict) {
  const auto r = call({"order", "--file", path3_, "--nodes", "a,b", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "second-greater");
  ASSERT_EQ(j.at("ranking").size(), 2U);
  EXPECT_EQ(j.at("ranking")[0].at("label"), "b");
}

TEST_F(CliTest, KorderCsv) {
  const auto r = call({"korder", "--file", path3_, "--nodes", "a,b,c", "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "rank,label,estimate\n1,b,2\n2,a,0\n3,c,0\n");
}

TEST_F(CliTest, EvaluateRow) {
  const auto r = call({"evaluate", "--gen", "ba:60:2", "--seed", "2", "--model", "eddbm,uniform"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header,
            "instance,model,T,avg_error,efficiency,relaxed_t2,relaxed_t3,relaxed_t5,"
            "relaxed_t10,spearman");
  int rows = 0;
  while (std::getline(in, row)) {
    ++rows;
    EXPECT_EQ(row.rfind("ba:60:2,", 0), 0U) << row;
    EXPECT_EQ(row.find(",,"), std::string::npos) << row;
  }
  EXPECT_EQ(rows, 2);
}

TEST_F(CliTest, AnalyzeLevelsHeader) {
  const auto r = call({"analyze-levels", "--gen", "er:200:0.03", "--seed", "1", "--graphs", "2",
                       "--sources", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(first_line(r.out),
            "level,alpha_predicted,alpha_exact_form,alpha_empirical_mean,alpha_empirical_std");
  EXPECT_NE(r.out.find("\n1,5.97,5.97,"), std::string::npos);
  EXPECT_EQ(call({"analyze-levels", "--gen", "ba:200:3"}).code, kConfigError);
}

TEST_F(CliTest, OutputFileAndMapping) {
  const std::string out = (dir_ / "bc.csv").string();
  const std::string map = (dir_ / "map.csv").string();
  const auto r = call({"exact", "--file", path3_, "-o", out, "--mapping", map});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(body.str(), "node_label,betweenness\na,0\nb,2\nc,0\n");
  EXPECT_TRUE(fs::exists(map));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(call({"exact", "--file", (dir_ / "missing.txt").string()}).code, kIoError);
  EXPECT_EQ(call({"exact", "--file", write("bad.txt", "a b\nonly\n")}).code, kParseError);
  EXPECT_EQ(call({"exact", "--file", path3_, "--gen", "er:10:0.5"}).code, kConfigError);
  EXPECT_EQ(call({"exact"}).code, kConfigError);
  EXPECT_EQ(call({"estimate", "--file", path3_, "--node", "zz"}).code, kConfigError);
  EXPECT_EQ(call({"estimate", "--file", path3_, "--node", "b", "--model", "nope"}).code,
            kConfigError);
  EXPECT_EQ(call({"exact", "--file", write("empty.txt", "# nothing\n")}).code, kEmptyGraph);
  EXPECT_EQ(call({"evaluate", "--file", write("k4.txt", "a b\na c\na d\nb c\nb d\nc d\n")}).code,
            kUndefinedMetric);
  EXPECT_EQ(call({"exact", "--gen", "er:10"}).code, kConfigError);
  EXPECT_EQ(call({"frobnicate"}).code, kConfigError);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(GeneratorSpec, Forms) {
  const auto er = parse_generator_spec("er:1000:0.01");
  EXPECT_EQ(er.kind, GeneratorSpec::Kind::kEr);
  EXPECT_EQ(er.n, 1000U);
  EXPECT_EQ(er.p, 0.01);
  const auto ba = parse_generator_spec("ba:1000:5");
  EXPECT_EQ(ba.kind, GeneratorSpec::Kind::kBa);
  EXPECT_EQ(ba.k, 5U);
  EXPECT_EQ(parse_generator_spec("ba-x:1000:2").k, 16U);
  EXPECT_NEAR(parse_generator_spec("er-x:1000:2").p, std::sqrt(1000.0) / 1000.0, 1e-15);
  EXPECT_THROW((void)parse_generator_spec("ws:10:2"), ConfigError);
  EXPECT_THROW((void)parse_generator_spec("er:ten:0.1"), ConfigError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace bolt::cli
