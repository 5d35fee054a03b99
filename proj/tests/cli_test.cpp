// Copyright 2026 The gusq Authors
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

namespace gusq::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gusq_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, PpmOperatorCsv) {
  const Result r = call({"ppm-operator", "--K", "3", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "# gusq 0.1.0\n"
            "1,0,0,0,0,0,0,0\n"
            "0,0,0,0,1,0,0,0\n"
            "0,1,0,0,0,0,0,0\n"
            "0,0,0,0,0,1,0,0\n"
            "0,0,1,0,0,0,0,0\n"
            "0,0,0,0,0,0,1,0\n"
            "0,0,0,1,0,0,0,0\n"
            "0,0,0,0,0,0,0,1\n");
}

TEST(Cli, NoHeaderAndDeterminism) {
  const Result a = call({"--no-header", "ppm-operator", "--K", "2", "--n", "2"});
  const Result b = call({"--no-header", "ppm-operator", "--K", "2", "--n", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "1,0,0,0\n0,0,1,0\n0,1,0,0\n0,0,0,1\n");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PhaseResidualReported) {
  const Result r = call({"ppm-operator", "--K", "3", "--n", "2", "--emit", "phi", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_LT(doc["residual"].get<double>(), 1e-10);
  EXPECT_EQ(doc["generator"], "gusq 0.1.0");
  EXPECT_NEAR(doc["matrix"]["re"][1][1].get<double>(), 2.0 * M_PI / 3.0, 1e-12);
  EXPECT_NE(r.err.find("exp(i*phi) - Q residual: "), std::string::npos);
}

TEST(Cli, ProjectorsForTrivialOrder) {
  const Result r = call({"--no-header", "ppm-operator", "--K", "1", "--n", "3", "--emit", "projectors"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "# P_0\n1,0,0\n0,1,0\n0,0,1\n");
}

TEST(Cli, ProjectorSections) {
  const Result r = call({"--no-header", "ppm-operator", "--K", "2", "--n", "2", "--emit", "projectors", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["projectors"].size(), 2u);
}

TEST(Cli, OperatorSizeLimit) {
  const Result r = call({"ppm-operator", "--K", "13", "--n", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, StateInfoPhotons) {
  const Json sq = Json::parse(call({"state-info", "--z", "1,0"}).out);
  EXPECT_NEAR(sq["photons"].get<double>(), std::sinh(1.0) * std::sinh(1.0), 1e-12);
  const Json coh = Json::parse(call({"state-info", "--alpha", "1", "--modes", "2"}).out);
  EXPECT_NEAR(coh["photons"].get<double>(), 2.0, 1e-12);
  EXPECT_EQ(coh["mean"].size(), 4u);
  for (const auto& nu : coh["symplectic_eigenvalues"]) EXPECT_NEAR(nu.get<double>(), 1.0, 1e-12);
}

TEST(Cli, SrmFromGram) {
  const std::string path = write_temp("gram.json", R"({"re": [[1, 0.5, 0.5], [0.5, 1, 0.5], [0.5, 0.5, 1]]})");
  const Result r = call({"srm", "--gram", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["path"], "circulant");
  EXPECT_NEAR(doc["pe"].get<double>(), 1.0 / 9.0, 1e-12);
  const Json generic = Json::parse(call({"srm", "--gram", path, "--path", "generic"}).out);
  EXPECT_EQ(generic["path"], "generic");
  EXPECT_NEAR(generic["pe"].get<double>(), 1.0 / 9.0, 1e-12);
}

TEST(Cli, SrmIdentityGram) {
  const std::string path = write_temp("identity.json", R"({"re": [[1, 0], [0, 1]]})");
  const Json doc = Json::parse(call({"srm", "--gram", path}).out);
  EXPECT_NEAR(doc["pe"].get<double>(), 0.0, 1e-14);
}

TEST(Cli, SrmFromConstellation) {
  const std::string path = write_temp("psk.json", R"({"symbols": [[{"alpha": [1, 0]}], [{"alpha": [-1, 0]}]]})");
  const Result r = call({"srm", "--constellation", path});
  ASSERT_EQ(r.code, 0) << r.err;
  // Binary PSK: Pe = (1 − √(1 − e^{−4|α|²}))/2.
  EXPECT_NEAR(Json::parse(r.out)["pe"].get<double>(), 0.5 * (1.0 - std::sqrt(1.0 - std::exp(-4.0))), 1e-12);
}

TEST(Cli, SrmErrors) {
  EXPECT_EQ(call({"srm", "--gram", write_temp("neg.json", R"({"re": [[1, 2], [2, 1]]})")}).code, 4);
  EXPECT_EQ(call({"srm", "--gram", write_temp("nonherm.json", R"({"re": [[1, 0.2], [0.5, 1]]})")}).code, 4);
  EXPECT_EQ(call({"srm", "--gram", write_temp("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(call({"srm", "--gram", write_temp("shape.json", R"({"re": "x"})")}).code, 2);
  EXPECT_EQ(call({"srm"}).code, 2);
  const std::string noncirc = write_temp("noncirc.json", R"({"re": [[1, 0.1, 0.3], [0.1, 1, 0.2], [0.3, 0.2, 1]]})");
  EXPECT_EQ(call({"srm", "--gram", noncirc, "--path", "circulant"}).code, 4);
  EXPECT_EQ(Json::parse(call({"srm", "--gram", noncirc}).out)["path"], "generic");
}

TEST(Cli, SweepThreshold) {
  const Result r = call({"--no-header", "ppm-sweep", "--K", "8", "--r", "1", "--nr-min", "0.1", "--nr-max", "1", "--points",
                         "10", "--spacing", "linear"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n_r,gamma,pe,feasible");
  int infeasible = 0, feasible = 0;
  while (std::getline(lines, line)) {
    const double nr = std::stod(line.substr(0, line.find(',')));
    const bool ok = line.ends_with(",true");
    EXPECT_EQ(ok, nr >= std::sinh(1.0) * std::sinh(1.0) / 3.0) << line;
    (ok ? feasible : infeasible)++;
  }
  EXPECT_EQ(infeasible, 4);  // 0.1 .. 0.4
  EXPECT_EQ(feasible, 6);
}

TEST(Cli, SweepCoherentAllFeasible) {
  const Result r = call({"ppm-sweep", "--points", "12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# gusq 0.1.0\n", 0), 0u);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
}

TEST(Cli, SweepErrors) {
  EXPECT_EQ(call({"ppm-sweep", "--r", "1", "--nr-max", "0.01"}).code, 5);
  EXPECT_EQ(call({"ppm-sweep", "--nr-min", "2", "--nr-max", "1"}).code, 5);
  EXPECT_EQ(call({"ppm-sweep", "--spacing", "cubic"}).code, 2);
  EXPECT_EQ(call({"ppm-sweep", "--theta", "banana"}).code, 2);
}

TEST(Cli, OracleAgrees) {
  const Result r = call({"oracle", "--r", "1", "--theta", "pi", "--alpha", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_NEAR(doc["analytic_gamma"].get<double>(), 0.11131681138285894, 1e-12);
  EXPECT_LT(doc["abs_diff"].get<double>(), 1e-8);
  EXPECT_EQ(doc["dim"], 60);
}

TEST(Cli, OracleTruncation) {
  const Result r = call({"oracle", "--r", "3"});
  EXPECT_EQ(r.code, 6);
  EXPECT_NE(r.err.find("suggested dimension: "), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"ppm-operator", "--K", "3"}).code, 2);
  EXPECT_EQ(call({"state-info", "--modes", "0"}).code, 2);
  EXPECT_EQ(call({"oracle", "--r", "-1"}).code, 2);
}

TEST(Cli, Version) {
  const Result r = call({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gusq 0.1.0"), std::string::npos);
}

TEST(CliParsing, Angles) {
  EXPECT_DOUBLE_EQ(parse_angle("pi"), M_PI);
  EXPECT_DOUBLE_EQ(parse_angle("-pi"), -M_PI);
  EXPECT_DOUBLE_EQ(parse_angle("2pi"), 2 * M_PI);
  EXPECT_DOUBLE_EQ(parse_angle("0.5*pi"), 0.5 * M_PI);
  EXPECT_DOUBLE_EQ(parse_angle("pi/2"), M_PI / 2);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/4"), 0.75 * M_PI);
  EXPECT_DOUBLE_EQ(parse_angle("1.25"), 1.25);
  EXPECT_ANY_THROW(parse_angle("pi/0"));
  EXPECT_ANY_THROW(parse_angle("pix"));
}

TEST(CliParsing, Complex) {
  EXPECT_EQ(parse_complex("1.5,-2"), std::complex<double>(1.5, -2.0));
  EXPECT_EQ(parse_complex("3"), std::complex<double>(3.0, 0.0));
  EXPECT_ANY_THROW(parse_complex("1,x"));
}

}  // namespace
}  // namespace gusq::cli
