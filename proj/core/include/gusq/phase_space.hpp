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

// N-mode Gaussian states in phase space, with ħ = 2 (vacuum covariance = I)
// and interleaved quadrature ordering (q₁, p₁, …, q_N, p_N).

#pragma once

#include <span>

#include "gusq/numeric.hpp"

namespace gusq {

inline constexpr double kPhysicalityTol = 1e-8;

enum class PhysicalityCheck { kEnforce, kSkip };

/// Block-diagonal symplectic form with 2×2 blocks [[0, 1], [−1, 0]].
RealMatrix symplectic_form(int modes);

/// Symplectic eigenvalues ν_i of a positive definite covariance (vacuum: 1),
/// ascending. Throws when V is not symmetric positive definite.
RealVector symplectic_eigenvalues(const RealMatrix& cov);

/// Immutable (mean, covariance) pair. Construction validates shape, symmetry,
/// positive definiteness and, unless skipped, ν_i ≥ 1 − 1e-8.
class GaussianState {
 public:
  GaussianState(RealVector mean, RealMatrix cov, PhysicalityCheck check = PhysicalityCheck::kEnforce);

  static GaussianState vacuum(int modes);

  int modes() const { return static_cast<int>(mean_.size() / 2); }
  const RealVector& mean() const { return mean_; }
  const RealMatrix& cov() const { return cov_; }

 private:
  RealVector mean_;
  RealMatrix cov_;
};

/// Phase-space image (S, d) of a Gaussian unitary: X̄ → S X̄ + d, V → S V Sᵀ.
class SymplecticMap {
 public:
  /// Throws unless S Ω Sᵀ = Ω within 1e-9 (scaled by max(1, ‖S‖²_max)).
  SymplecticMap(RealMatrix s, RealVector d);

  static SymplecticMap identity(int modes);

  int modes() const { return static_cast<int>(d_.size() / 2); }
  const RealMatrix& s() const { return s_; }
  const RealVector& d() const { return d_; }

  /// ‖S Ω Sᵀ − Ω‖_max.
  double symplectic_defect() const;

 private:
  RealMatrix s_;
  RealVector d_;
};

/// Gaussian channel triplet: X̄ → Eᵀ X̄ + ℓ, V → Eᵀ V E + F.
class GaussianChannel {
 public:
  /// Throws unless F is symmetric positive semidefinite within 1e-10.
  GaussianChannel(RealMatrix e, RealVector shift, RealMatrix f);

  static GaussianChannel lossy(int modes, double eta);
  static GaussianChannel thermal(int modes, double eta, double thermal_variance);
  static GaussianChannel amplifier(int modes, double gain);
  static GaussianChannel classical_noise(int modes, double noise);

  int modes() const { return static_cast<int>(shift_.size() / 2); }
  const RealMatrix& e() const { return e_; }
  const RealVector& shift() const { return shift_; }
  const RealMatrix& f() const { return f_; }

 private:
  RealMatrix e_;
  RealVector shift_;
  RealMatrix f_;
};

/// χ(w) = exp(−½ wᵀ Ω V Ωᵀ w − i (Ω X̄)ᵀ w).
cplx characteristic_function(const GaussianState& state, std::span<const double> point);

GaussianState apply_symplectic(const GaussianState& state, const SymplecticMap& map);

/// Throws Error(kNumeric) when the output breaks ν ≥ 1 by more than 1e-6.
GaussianState apply_channel(const GaussianState& state, const GaussianChannel& channel);

struct WilliamsonForm {
  RealVector nu;            // symplectic eigenvalues σ², ascending
  SymplecticMap transform;  // V = S diag(ν₁, ν₁, …) Sᵀ, zero displacement
};

/// Williamson normal form via V^{1/2} Ω V^{1/2} and its skew block form.
WilliamsonForm williamson(const RealMatrix& cov);

/// Product of single-mode thermal states with covariances ν_i I₂. Throws if any ν_i < 1.
GaussianState thermal_state(std::span<const double> nu);

/// ½(ν − 1): thermal photons of one mode.
double thermal_photons(double nu);

/// (Tr V − 2N)/4 + |X̄|²/4.
double mean_photon_number(const GaussianState& state);

/// Tr(ρ₁ρ₂) = 2^N / √det(V₁ + V₂) · exp(−½ δᵀ (V₁ + V₂)⁻¹ δ). For pure states
/// this is the squared modulus of the inner product.
double state_overlap(const GaussianState& a, const GaussianState& b);

}  // namespace gusq
