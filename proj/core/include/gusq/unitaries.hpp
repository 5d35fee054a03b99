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

// The three fundamental Gaussian unitaries D(α), R(φ), S(z) as symplectic
// maps, their switching rules, and generation of general Gaussian states.
//
// Conventions: S(z) = exp(½(z a†² − z* a²)) acts as a → C a + D a† with
// C = U cosh(r) U†, D = U sinh(r) Uᵀ (Takagi z = U r Uᵀ); R(φ) acts as
// a → e^{iφ} a; D(α) shifts the mean by d = (2 Re α₁, 2 Im α₁, …).

#pragma once

#include <span>
#include <utility>

#include "gusq/phase_space.hpp"

namespace gusq {

struct DisplacementParams {
  ComplexVector alpha;

  explicit DisplacementParams(ComplexVector a);
  static DisplacementParams single(cplx a) { return DisplacementParams(ComplexVector::Constant(1, a)); }
  static DisplacementParams zero(int modes) { return DisplacementParams(ComplexVector::Zero(modes)); }
  int modes() const { return static_cast<int>(alpha.size()); }
};

struct RotationParams {
  ComplexMatrix phi;  // Hermitian, radians

  explicit RotationParams(ComplexMatrix p);
  static RotationParams single(double angle) { return RotationParams(ComplexMatrix::Constant(1, 1, angle)); }
  /// φ·I_N: the same phase rotation on every mode.
  static RotationParams uniform(int modes, double angle);
  int modes() const { return static_cast<int>(phi.rows()); }
};

struct SqueezeParams {
  ComplexMatrix z;  // complex symmetric

  explicit SqueezeParams(ComplexMatrix zz);
  static SqueezeParams single(cplx z) { return SqueezeParams(ComplexMatrix::Constant(1, 1, z)); }
  static SqueezeParams polar(double r, double theta) { return single(std::polar(r, theta)); }
  static SqueezeParams zero(int modes) { return SqueezeParams(ComplexMatrix::Zero(modes, modes)); }
  int modes() const { return static_cast<int>(z.rows()); }
};

/// Real 2N×2N matrix of the linear map m → C m + D m* on complex amplitudes.
RealMatrix complex_linear_to_real(const ComplexMatrix& c, const ComplexMatrix& d);

/// Amplitude α ↦ phase-space displacement (2 Re α, 2 Im α) per mode.
RealVector displacement_vector(const ComplexVector& alpha);

SymplecticMap displacement_map(const DisplacementParams& p);
SymplecticMap rotation_map(const RotationParams& p);
SymplecticMap squeeze_map(const SqueezeParams& p);

/// e^{iφ}.
ComplexMatrix rotation_unitary(const RotationParams& p);

struct Bogoliubov {
  ComplexMatrix c;  // U cosh(r) U†
  ComplexMatrix d;  // U sinh(r) Uᵀ
};
Bogoliubov squeeze_bogoliubov(const SqueezeParams& p);

/// Maps listed in application order: the first element acts on the state first.
SymplecticMap compose(std::span<const SymplecticMap> maps);
SymplecticMap compose(std::initializer_list<SymplecticMap> maps);

/// β with D(α) S(z) = S(z) D(β): β = C α − D α*.
ComplexVector switch_displacement_squeeze(const DisplacementParams& alpha, const SqueezeParams& z);
/// z₀ with S(z) R(φ) = R(φ) S(z₀): z₀ = e^{−iφ} z e^{−iφᵀ}.
ComplexMatrix switch_rotation_squeeze(const SqueezeParams& z, const RotationParams& phi);
/// β with D(α) R(φ) = R(φ) D(β): β = e^{−iφ} α.
ComplexVector switch_rotation_displacement(const DisplacementParams& alpha, const RotationParams& phi);

/// D(α) S(z) |0⟩.
GaussianState generate_pure_state(const SqueezeParams& z, const DisplacementParams& alpha);

/// D(α) R(φ) S(z) applied to the thermal state with variances ν.
GaussianState generate_mixed_state(const SqueezeParams& z, const RotationParams& phi, const DisplacementParams& alpha,
                                   std::span<const double> nu);

}  // namespace gusq
