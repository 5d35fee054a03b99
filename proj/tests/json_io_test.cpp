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

#include "gusq/json_io.hpp"

#include <gtest/gtest.h>

#include "gusq/error.hpp"
#include "gusq/ppm.hpp"
#include "oracles.hpp"

namespace gusq {
namespace {

using testing::max_abs_diff;

TEST(StateJson, RoundTrip) {
  const GaussianState s = generate_pure_state(SqueezeParams::polar(0.5, 0.3), DisplacementParams::single(cplx(0.1, -0.7)));
  const json::Json doc = json::to_json(s);
  EXPECT_EQ(doc["modes"], 1);
  EXPECT_EQ(doc["cov"].size(), 2u);
  const GaussianState back = json::state_from_json(json::Json::parse(doc.dump()));
  EXPECT_EQ(back.mean(), s.mean());
  EXPECT_LT(max_abs_diff(back.cov(), s.cov()), 1e-15);
}

TEST(StateJson, Malformed) {
  for (const char* text : {R"({"mean": [0, 0]})", R"({"mean": [0, 0], "cov": [[1, 0], [0]]})",
                           R"({"mean": "x", "cov": [[1, 0], [0, 1]]})", R"({"modes": 2, "mean": [0, 0], "cov": [[1, 0], [0, 1]]})"}) {
    try {
      json::state_from_json(json::Json::parse(text));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInput) << text;
    }
  }
}

TEST(GramJson, RoundTripAndRealOnly) {
  ComplexMatrix g = ppm_gram(3, 0.2).entries();
  g(0, 1) = cplx(0.2, 0.1);
  g(1, 0) = cplx(0.2, -0.1);
  const GramMatrix back = json::gram_from_json(json::to_json(GramMatrix(g)));
  EXPECT_EQ(back.entries(), g);
  const GramMatrix real = json::gram_from_json(json::Json::parse(R"({"re": [[1, 0.5], [0.5, 1]]})"));
  EXPECT_EQ(real.entries()(0, 1), cplx(0.5, 0.0));
}

TEST(GramJson, NonHermitianIsInvalidGram) {
  try {
    json::gram_from_json(json::Json::parse(R"({"re": [[1, 0.5], [0.2, 1]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGram);
  }
}

TEST(ReportJson, Fields) {
  const json::Json doc = json::to_json(srm_auto(ppm_gram(3, 0.5)));
  EXPECT_EQ(doc["path"], "circulant");
  EXPECT_NEAR(doc["pe"].get<double>(), 1.0 / 9.0, 1e-14);
  EXPECT_EQ(doc["transition"].size(), 3u);
  EXPECT_EQ(doc["lambdas"].size(), 3u);
  EXPECT_EQ(doc["rank"], 3);
}

TEST(ConstellationJson, RoundTrip) {
  const Constellation c = ppm_constellation({3, 0.5, kPi, 1.0});
  const json::Json doc = json::to_json(c);
  EXPECT_EQ(doc["K"], 3);
  EXPECT_EQ(doc["modes"], 3);
  const Constellation back = json::constellation_from_json(doc);
  for (int i = 0; i < 3; ++i)
    for (int m = 0; m < 3; ++m) {
      EXPECT_NEAR(std::abs(back.params()[i][m].z() - c.params()[i][m].z()), 0.0, 1e-15);
      EXPECT_EQ(back.params()[i][m].alpha, c.params()[i][m].alpha);
    }
}

TEST(ConstellationJson, Mismatches) {
  for (const char* text : {R"({"K": 2, "symbols": [[{"z": [0, 0]}]]})", R"({"symbols": [[{"z": [0, 0]}], [{}, {}]]})",
                           R"({"symbols": []})", R"({"symbols": [[{"alpha": [1]}]]})"}) {
    EXPECT_THROW(json::constellation_from_json(json::Json::parse(text)), Error) << text;
  }
}

TEST(ParamsJson, DiagonalAndFullForms) {
  const json::GaussianParams diag = json::params_from_json(json::Json::parse(R"({"z": [[0.5, 0], [0, 0.2]], "alpha": [[1, 0], [0, 1]]})"));
  EXPECT_EQ(diag.z.z(0, 0), cplx(0.5, 0.0));
  EXPECT_EQ(diag.z.z(1, 1), cplx(0.0, 0.2));
  EXPECT_EQ(diag.z.z(0, 1), cplx(0.0, 0.0));
  EXPECT_EQ(diag.phi.phi, ComplexMatrix::Zero(2, 2));

  const json::GaussianParams back = json::params_from_json(json::to_json(diag));
  EXPECT_EQ(back.z.z, diag.z.z);
  EXPECT_EQ(back.alpha.alpha, diag.alpha.alpha);
  EXPECT_THROW(json::params_from_json(json::Json::parse(R"({"z": [[[1, 0], [2, 0]], [[3, 0], [1, 0]]]})")), Error);
}

}  // namespace
}  // namespace gusq
