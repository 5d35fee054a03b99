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

// Truncated Fock-space brute force: explicit matrices for D(α), S(z), R(φ)
// and state vectors, used to validate the analytic formulas.
//
// Truncation is monitored through the probability weight a state (or an
// operator applied to |0⟩) places on its top kTailLevels levels.

#pragma once

#include <span>

#include "gusq/numeric.hpp"
#include "gusq/overlaps.hpp"

namespace gusq {

inline constexpr int kDefaultFockDim = 60;
inline constexpr int kTailLevels = 5;
/// Default cap on the top-level weight of D(α)S(z)|0⟩ before an operator is rejected.
inline constexpr double kDefaultMaxTail = 1e-3;
/// Allowed change of an oracle overlap between dimensions D and D + kConvergenceStep.
inline constexpr double kOverlapConvergenceTol = 1e-10;
inline constexpr int kConvergenceStep = 20;
inline constexpr int kMaxFockDim = 2000;
inline constexpr std::size_t kMaxKronDim = 100000;

struct FockVector {
  ComplexVector amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  static FockVector vacuum(int dim);
  static FockVector number(int n, int dim);
  double norm() const { return amplitudes.norm(); }
  /// Probability weight on the top kTailLevels levels.
  double tail_mass() const;
};

struct FockOperator {
  ComplexMatrix matrix;
  double tail_mass = 0.0;  // weight of matrix·|0⟩ on the top levels

  int dim() const { return static_cast<int>(matrix.rows()); }
  FockVector apply(const FockVector& v) const;
  /// ‖M*M − I‖_max.
  double unitarity_defect() const;
};

struct LadderOperators {
  FockOperator lower;  // a|n⟩ = √n |n−1⟩
  FockOperator raise;  // a†
};

LadderOperators ladder_operators(int dim);
FockOperator number_operator(int dim);

/// exp(α a† − α* a). Throws TruncationError when the tail of D(α)|0⟩ exceeds max_tail.
FockOperator fock_displacement(cplx alpha, int dim = kDefaultFockDim, double max_tail = kDefaultMaxTail);
/// exp(½(z a†² − z* a²)).
FockOperator fock_squeeze(cplx z, int dim = kDefaultFockDim, double max_tail = kDefaultMaxTail);
/// diag(e^{inφ}).
FockOperator fock_rotation(double phi, int dim = kDefaultFockDim);

/// D(α) S(z) |0⟩ at truncation dim. Throws TruncationError when its tail exceeds max_tail.
FockVector fock_state(const SingleModeParams& p, int dim = kDefaultFockDim, double max_tail = kDefaultMaxTail);

/// ⟨ψ|n|ψ⟩ / ⟨ψ|ψ⟩.
double fock_photon_number(const FockVector& v);

/// Smallest dimension ≥ start, in steps of kConvergenceStep up to kMaxFockDim,
/// whose state tail is below max_tail. Throws TruncationError if none.
int required_dimension(const SingleModeParams& p, double max_tail, int start = kDefaultFockDim);

struct OracleOverlap {
  cplx value;
  double truncation_error;  // |value(D) − value(D + kConvergenceStep)|
  int dim;
};

/// ⟨0| S†(z₁) D†(α₁) D(α₀) S(z₀) |0⟩ by explicit matrix products.
OracleOverlap oracle_overlap(const SingleModeParams& bra, const SingleModeParams& ket, int dim = kDefaultFockDim);

/// Kronecker product of per-mode vectors; mode k carries weight n^k in the
/// flattened index (mode 0 is the fastest-varying digit).
FockVector kron_state(std::span<const FockVector> modes);

}  // namespace gusq
