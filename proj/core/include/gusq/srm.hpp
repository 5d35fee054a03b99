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

// Square-root measurement on pure-state constellations: the generic Gram
// eigendecomposition path and the DFT path for circulant Grams.

#pragma once

#include <vector>

#include "gusq/gus.hpp"
#include "gusq/numeric.hpp"

namespace gusq {

/// K×K Gram matrix G_ij = ⟨γ_i|γ_j⟩; Hermitian within 1e-10 (symmetrized on construction).
class GramMatrix {
 public:
  explicit GramMatrix(ComplexMatrix entries);

  /// Unit diagonal, every off-diagonal entry equal to `gamma`.
  static GramMatrix constant_offdiagonal(int order, cplx gamma);
  /// Circulant matrix with G_ij = row[(j − i) mod K].
  static GramMatrix circulant(const ComplexVector& first_row);

  int order() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }
  ComplexVector first_row() const { return entries_.row(0).transpose(); }

 private:
  ComplexMatrix entries_;
};

enum class SrmPath { kGeneric, kCirculant };

const char* to_string(SrmPath path);

struct DetectionReport {
  RealMatrix transition;        // p_c(j|i) at (i, j)
  double pc = 0.0;
  double pe = 1.0;
  std::vector<double> lambdas;  // DFT eigenvalues λ_p (circulant) or ascending eigenvalues (generic)
  int rank = 0;
  SrmPath path = SrmPath::kGeneric;
};

inline constexpr double kEigenClampTol = 1e-10;
inline constexpr double kInvalidGramTol = 1e-8;
inline constexpr double kPseudoInverseRelTol = 1e-12;
inline constexpr double kCirculantTol = 1e-12;

/// Uses the per-mode parameters of the states (pure product states only).
GramMatrix gram_from_constellation(const Constellation& c);

/// Equiprobable SRM through G^{1/2}: p_c(j|i) = |(G^{1/2})_ij|², Pc = (1/K) Σ |(G^{1/2})_ii|².
/// Eigenvalues in [−1e-10, 0) are clamped; anything below −1e-8 throws Error(kInvalidGram).
/// Eigenvalues at or below 1e-12·λmax count as zero in both rank and G^{1/2}.
DetectionReport srm_generic(const GramMatrix& g);

/// λ_p = Σ_q G_0q W^{−pq}; p_c(j|i) = |(1/K) Σ_p √λ_p W^{−p(i−j)}|²; Pc = [(1/K) Σ_p √λ_p]².
DetectionReport srm_circulant(const ComplexVector& first_row);

/// Largest |G_ij − G_0,(j−i) mod K|.
double circulant_deviation(const GramMatrix& g);
bool is_circulant(const GramMatrix& g);

/// Circulant path when the Gram is circulant within 1e-12, otherwise generic.
DetectionReport srm_auto(const GramMatrix& g);

struct MeasurementVectors {
  ComplexMatrix coefficients;     // |μ_i⟩ = Σ_j c_ij |γ_j⟩, c = G^{−1/2} (pseudo-inverse)
  int rank = 0;
  double resolution_residual = 0.0;  // ‖G^{−1/2} G G^{−1/2} − Π_rank‖_max
};

MeasurementVectors measurement_vectors(const GramMatrix& g);

}  // namespace gusq
