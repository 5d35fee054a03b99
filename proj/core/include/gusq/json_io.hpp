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

// JSON documents for states, Gram matrices, detection reports, constellations
// and multimode Gaussian parameters.

#pragma once

#include <nlohmann/json.hpp>

#include "gusq/gus.hpp"
#include "gusq/srm.hpp"
#include "gusq/unitaries.hpp"

namespace gusq::json {

using Json = nlohmann::json;

/// Malformed documents throw Error(kInput).

/// {"modes": N, "mean": [...], "cov": [[...]]}
Json to_json(const GaussianState& state);
GaussianState state_from_json(const Json& doc);

/// {"re": [[...]], "im": [[...]]}
Json to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& doc);

Json to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& doc);

Json to_json(const GramMatrix& g);
GramMatrix gram_from_json(const Json& doc);

/// {"path", "pc", "pe", "rank", "lambdas", "transition"}
Json to_json(const DetectionReport& report);

/// {"K", "modes", "symbols": [[{"z": [re, im], "alpha": [re, im]}, ...], ...], "priors"?}
Json to_json(const Constellation& c);
Constellation constellation_from_json(const Json& doc);

/// {"z": ..., "phi": ..., "alpha": [[re, im], ...]}; "z" and "phi" are either
/// a list of per-mode pairs (diagonal) or an N×N nested list of pairs. Missing
/// fields are zero.
struct GaussianParams {
  SqueezeParams z;
  RotationParams phi;
  DisplacementParams alpha;
};
Json to_json(const GaussianParams& p);
GaussianParams params_from_json(const Json& doc);

}  // namespace gusq::json
