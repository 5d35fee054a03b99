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

#include <string>
#include <vector>

#include "gusq/error.hpp"

namespace gusq::json {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInput, what); }

// Runs a parser, translating nlohmann exceptions into Error(kInput).
template <typename F>
auto guarded(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

Json pair(cplx v) { return Json::array({v.real(), v.imag()}); }

cplx pair_from(const Json& v) {
  if (!v.is_array() || v.size() != 2) bad("complex numbers are [re, im] pairs");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<cplx> pairs_from(const Json& v) {
  if (!v.is_array()) bad("expected a list of [re, im] pairs");
  std::vector<cplx> out;
  for (const Json& e : v) out.push_back(pair_from(e));
  return out;
}

bool is_pair(const Json& v) { return v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(); }

// List of pairs → diagonal; nested list → full matrix.
ComplexMatrix mode_matrix_from(const Json& v, int modes) {
  if (!v.is_array() || v.empty()) bad("mode matrix must be a nonempty list");
  if (is_pair(v[0])) {
    const std::vector<cplx> diag = pairs_from(v);
    if (static_cast<int>(diag.size()) != modes) bad("mode matrix length differs from the mode count");
    ComplexMatrix m = ComplexMatrix::Zero(modes, modes);
    for (int i = 0; i < modes; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
  }
  if (static_cast<int>(v.size()) != modes) bad("mode matrix must be N x N");
  ComplexMatrix m(modes, modes);
  for (int i = 0; i < modes; ++i) {
    const std::vector<cplx> row = pairs_from(v[static_cast<std::size_t>(i)]);
    if (static_cast<int>(row.size()) != modes) bad("mode matrix must be N x N");
    for (int j = 0; j < modes; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

Json mode_matrix_to(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(pair(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> numbers(const Json& v) {
  if (!v.is_array()) bad("expected a list of numbers");
  return v.get<std::vector<double>>();
}

RealVector vector_from(const std::vector<double>& v) {
  return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

RealMatrix real_matrix_from_json(const Json& doc) {
  return guarded("matrix", [&] {
    if (!doc.is_array() || doc.empty()) bad("matrix must be a nonempty list of rows");
    const auto rows = static_cast<Eigen::Index>(doc.size());
    const auto cols = static_cast<Eigen::Index>(numbers(doc[0]).size());
    RealMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const std::vector<double> row = numbers(doc[static_cast<std::size_t>(i)]);
      if (static_cast<Eigen::Index>(row.size()) != cols) bad("matrix rows differ in length");
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
    }
    return m;
  });
}

Json to_json(const ComplexMatrix& m) { return Json{{"re", to_json(RealMatrix(m.real()))}, {"im", to_json(RealMatrix(m.imag()))}}; }

ComplexMatrix complex_matrix_from_json(const Json& doc) {
  const RealMatrix re = real_matrix_from_json(field(doc, "re"));
  if (!doc.contains("im")) return re.cast<cplx>();
  const RealMatrix im = real_matrix_from_json(doc.at("im"));
  if (re.rows() != im.rows() || re.cols() != im.cols()) bad("\"re\" and \"im\" differ in shape");
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Json to_json(const GaussianState& state) {
  Json mean = Json::array();
  for (Eigen::Index i = 0; i < state.mean().size(); ++i) mean.push_back(state.mean()(i));
  return Json{{"modes", state.modes()}, {"mean", mean}, {"cov", to_json(state.cov())}};
}

GaussianState state_from_json(const Json& doc) {
  return guarded("state", [&] {
    const RealVector mean = vector_from(numbers(field(doc, "mean")));
    const RealMatrix cov = real_matrix_from_json(field(doc, "cov"));
    if (doc.contains("modes") && doc.at("modes").get<int>() * 2 != mean.size()) bad("\"modes\" disagrees with the mean length");
    return GaussianState(mean, cov);
  });
}

Json to_json(const GramMatrix& g) { return to_json(g.entries()); }

GramMatrix gram_from_json(const Json& doc) {
  return guarded("gram", [&] { return GramMatrix(complex_matrix_from_json(doc)); });
}

Json to_json(const DetectionReport& report) {
  return Json{{"path", to_string(report.path)}, {"pc", report.pc},       {"pe", report.pe},
              {"rank", report.rank},           {"lambdas", report.lambdas}, {"transition", to_json(report.transition)}};
}

Json to_json(const Constellation& c) {
  Json doc{{"K", c.order()}, {"modes", c.modes()}};
  Json symbols = Json::array();
  for (const auto& symbol : c.params()) {
    Json modes = Json::array();
    for (const SingleModeParams& p : symbol) modes.push_back(Json{{"z", pair(p.z())}, {"alpha", pair(p.alpha)}});
    symbols.push_back(modes);
  }
  doc["symbols"] = symbols;
  doc["priors"] = c.priors();
  return doc;
}

Constellation constellation_from_json(const Json& doc) {
  return guarded("constellation", [&] {
    const Json& symbols = field(doc, "symbols");
    if (!symbols.is_array() || symbols.empty()) bad("\"symbols\" must be a nonempty list");
    std::vector<std::vector<SingleModeParams>> params;
    for (const Json& symbol : symbols) {
      if (!symbol.is_array() || symbol.empty()) bad("each symbol is a nonempty list of modes");
      std::vector<SingleModeParams> modes;
      for (const Json& mode : symbol) {
        const cplx z = mode.contains("z") ? pair_from(mode.at("z")) : cplx{};
        const cplx alpha = mode.contains("alpha") ? pair_from(mode.at("alpha")) : cplx{};
        modes.push_back(SingleModeParams::from_z(z, alpha));
      }
      params.push_back(std::move(modes));
    }
    if (doc.contains("K") && doc.at("K").get<std::size_t>() != params.size()) bad("\"K\" disagrees with the symbol count");
    if (doc.contains("modes") && doc.at("modes").get<std::size_t>() != params.front().size())
      bad("\"modes\" disagrees with the symbol length");
    std::vector<double> priors;
    if (doc.contains("priors")) priors = numbers(doc.at("priors"));
    return Constellation::from_params(std::move(params), std::move(priors));
  });
}

Json to_json(const GaussianParams& p) {
  Json alpha = Json::array();
  for (Eigen::Index i = 0; i < p.alpha.alpha.size(); ++i) alpha.push_back(pair(p.alpha.alpha(i)));
  return Json{{"z", mode_matrix_to(p.z.z)}, {"phi", mode_matrix_to(p.phi.phi)}, {"alpha", alpha}};
}

GaussianParams params_from_json(const Json& doc) {
  return guarded("parameters", [&] {
    if (!doc.is_object()) bad("parameters must be an object");
    int modes = 0;
    if (doc.contains("alpha")) modes = static_cast<int>(doc.at("alpha").size());
    for (const char* key : {"z", "phi"})
      if (modes == 0 && doc.contains(key)) modes = static_cast<int>(doc.at(key).size());
    if (modes == 0) bad("parameters need at least one of \"z\", \"phi\", \"alpha\"");

    ComplexVector alpha = ComplexVector::Zero(modes);
    if (doc.contains("alpha")) {
      const std::vector<cplx> a = pairs_from(doc.at("alpha"));
      for (int i = 0; i < modes; ++i) alpha(i) = a[static_cast<std::size_t>(i)];
    }
    const ComplexMatrix z = doc.contains("z") ? mode_matrix_from(doc.at("z"), modes) : ComplexMatrix::Zero(modes, modes);
    const ComplexMatrix phi = doc.contains("phi") ? mode_matrix_from(doc.at("phi"), modes) : ComplexMatrix::Zero(modes, modes);
    return GaussianParams{SqueezeParams(z), RotationParams(phi), DisplacementParams(alpha)};
  });
}

}  // namespace gusq::json
