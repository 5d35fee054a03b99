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

// PPM constellations over K modes, the closed-form SRM error probability and
// photon-budget sweeps.

#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "gusq/gus.hpp"
#include "gusq/srm.hpp"

namespace gusq {

struct PpmConfig {
  int order = 2;
  double r = 0.0;
  double theta = kPi;
  double alpha = 0.0;  // real displacement, ≥ 0

  /// Fixes (r, θ) and takes α = √(Ns − sinh² r). Throws Error(kNumeric) if Ns < sinh² r.
  static PpmConfig from_photon_budget(int order, double ns, double r, double theta = kPi);
};

/// Symbol i carries |r e^{iθ}, α⟩ in mode i and vacuum in every other mode.
Constellation ppm_constellation(const PpmConfig& cfg);

/// Phase-space symmetry of PPM: the cyclic shift of the K mode blocks.
SymmetryDescriptor ppm_mode_symmetry(int order);

/// Unit diagonal with Γ everywhere else.
GramMatrix ppm_gram(int order, double gamma);

/// Pe = 1 − (1/K²)(√(1 + (K−1)Γ) + (K−1)√(1 − Γ))², Γ ∈ [0, 1].
double ppm_error_probability(int order, double gamma);

/// Γ = sech r · exp(−(Ns − sinh² r) f(r, θ)); throws Error(kNumeric) if Ns < sinh² r.
double gamma_from_photon_budget(double ns, double r, double theta);

/// Smallest photons-per-bit budget with room for a displacement: sinh² r / log₂ K.
double min_feasible_nr(int order, double r);

struct SweepRow {
  double n_r = 0.0;
  std::optional<double> gamma;  // empty when infeasible
  std::optional<double> pe;
  bool feasible() const { return pe.has_value(); }
};

enum class SweepSpacing { kLog, kLinear };

/// Rows ordered by N_R; infeasible points stay in place with empty fields.
/// Throws Error(kEmptyRange) when the range is malformed or no point is feasible.
std::vector<SweepRow> pe_sweep(int order, double r, double theta, double nr_min, double nr_max, int points,
                               SweepSpacing spacing = SweepSpacing::kLog);

/// Header `n_r,gamma,pe,feasible`, 12 significant digits, LF endings, locale independent.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Scientific notation with 12 significant digits in the classic locale.
std::string format_scientific(double value);

}  // namespace gusq
