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

// Analytic inner products and photon statistics of single-mode
// squeezed-displaced states |z, α⟩ = D(α) S(z) |0⟩ with z = r e^{iθ}.

#pragma once

#include <span>

#include "gusq/numeric.hpp"

namespace gusq {

struct SingleModeParams {
  double r = 0.0;      // squeeze magnitude, ≥ 0
  double theta = 0.0;  // squeeze phase
  cplx alpha{0.0, 0.0};

  static SingleModeParams vacuum() { return {}; }
  cplx z() const { return std::polar(r, theta); }
  /// Builds params from a complex squeeze factor; r = |z|, θ = arg z.
  static SingleModeParams from_z(cplx z, cplx alpha);
};

bool operator==(const SingleModeParams& a, const SingleModeParams& b);

/// ⟨z₁, α₁ | z₀, α₀⟩ in Yuen's two-photon coherent-state form:
///
///   A^{−1/2} exp(−[A(|β₁|² + |β₀|²) − 2 β₁* β₀ + B β₁*² − B* β₀²] / 2A)
///
/// with μ = cosh r, ν = −e^{iθ} sinh r, β = μ α + ν α*, A = μ₀ μ₁* − ν₀ ν₁*,
/// B = ν₀ μ₁ − μ₀ ν₁ and the principal branch of A^{−1/2}. The sign of ν is the
/// one for which |z, α⟩ = D(α) S(z)|0⟩ reproduces the Fock-space brute force.
cplx yuen_inner_product(const SingleModeParams& bra, const SingleModeParams& ket);

/// Exponent f(r, θ) of Γ = sech r · exp(−α² f): f = 1 − tanh r cos θ.
double overlap_exponent(double r, double theta);

/// Γ = |⟨r e^{iθ}, α | 0, 0⟩|² for real α.
double gamma_vacuum_overlap(double r, double theta, double alpha);

/// N_s = |α|² + sinh² r.
double symbol_photon_number(double r, cplx alpha);

/// Product over modes of yuen_inner_product for tensor-product states.
cplx multimode_gram_entry(std::span<const SingleModeParams> bra, std::span<const SingleModeParams> ket);

}  // namespace gusq
