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

// Geometrically uniform constellations: construction (PSK), verification in
// phase space or Hilbert space, the PPM mode-shift symmetry with its spectral
// projectors and phase matrix, and the Gaussian-channel closure check.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gusq/overlaps.hpp"
#include "gusq/phase_space.hpp"
#include "gusq/unitaries.hpp"

namespace gusq {

/// K states with common mode count. Per-mode parameters (needed for Gram
/// matrices) and Hilbert-space vectors are optional companions.
class Constellation {
 public:
  explicit Constellation(std::vector<GaussianState> states, std::vector<double> priors = {});

  /// Pure squeezed-displaced product states, one parameter list per symbol.
  static Constellation from_params(std::vector<std::vector<SingleModeParams>> params, std::vector<double> priors = {});

  int order() const { return static_cast<int>(states_.size()); }
  int modes() const { return states_.front().modes(); }
  const std::vector<GaussianState>& states() const { return states_; }
  const std::vector<double>& priors() const { return priors_; }

  bool has_params() const { return params_.has_value(); }
  const std::vector<std::vector<SingleModeParams>>& params() const;

  bool has_vectors() const { return vectors_.has_value(); }
  const std::vector<ComplexVector>& vectors() const;
  /// Attach unit-norm Hilbert-space vectors (one per state).
  Constellation with_vectors(std::vector<ComplexVector> vectors) const;

 private:
  std::vector<GaussianState> states_;
  std::vector<double> priors_;
  std::optional<std::vector<std::vector<SingleModeParams>>> params_;
  std::optional<std::vector<ComplexVector>> vectors_;
};

enum class SymmetryKind { kPhaseSpace, kHilbert };

struct SymmetryDescriptor {
  SymmetryKind kind;
  int order;
  std::optional<SymplecticMap> phase_space;  // S_Q, kind == kPhaseSpace
  std::optional<ComplexMatrix> hilbert;      // Q, kind == kHilbert

  static SymmetryDescriptor from_symplectic(SymplecticMap s, int order);
  static SymmetryDescriptor from_unitary(ComplexMatrix q, int order);
};

/// Parameters of R(φ) D(α) S(z)|0⟩ = D(α') S(z')|0⟩: z' = e^{iφ} z e^{iφᵀ}, α' = e^{iφ} α.
std::pair<SqueezeParams, DisplacementParams> rotate_params(const SqueezeParams& z, const DisplacementParams& alpha,
                                                           const RotationParams& phi);
/// Single-mode form: θ' = θ + 2φ, α' = e^{iφ} α.
SingleModeParams rotate_params(const SingleModeParams& p, double phi);

struct PskConstellation {
  Constellation constellation;
  SymmetryDescriptor symmetry;
};

/// K-ary PSK: state i is the reference |z, α⟩ rotated i times by 2π/K.
PskConstellation build_psk(int order, cplx z, cplx alpha);

/// 0/1 permutation matrix stored as an index map: column c has its unit entry in row image[c].
class Permutation {
 public:
  explicit Permutation(std::vector<std::int64_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::int64_t>& image() const { return image_; }
  /// this ∘ other (apply other first).
  Permutation compose(const Permutation& other) const;
  Permutation power(int k) const;
  bool is_identity() const;
  ComplexMatrix to_matrix() const;
  ComplexVector apply(const ComplexVector& v) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int64_t> image_;
};

inline constexpr std::int64_t kMaxPpmDim = 4096;

/// PPM symmetry Q on the n^K-dimensional product space (mode k has weight n^k):
/// the cyclic mode shift |x₀, …, x_{K−1}⟩ ↦ |x_{K−1}, x₀, …, x_{K−2}⟩, i.e.
/// Q = Σ_k w_nᵀ(k) ⊗ I_{n^{K−1}} ⊗ w_n(k). Throws Error(kSizeLimit) above 4096.
Permutation ppm_symmetry_operator(int order, int levels);

/// Cap on the dimension of dense projector and phase matrices.
inline constexpr std::int64_t kMaxDenseDim = 1024;

/// P_m = (1/K) Σ_k W_K^{−mk} Q^k. Throws unless Q^K = I within 1e-10.
std::vector<ComplexMatrix> ppm_projectors(const ComplexMatrix& q, int order);
/// Same for a permutation Q (Q^K = I checked exactly); Error(kSizeLimit) above kMaxDenseDim.
std::vector<ComplexMatrix> ppm_projectors(const Permutation& q, int order);

struct PhaseMatrix {
  ComplexMatrix phi;
  double residual;  // ‖exp(iφ) − Q‖_max over the checked columns
};

/// φ = Σ_m (2πm/K) P_m. exp(iφ) is evaluated column by column with a scaled
/// Taylor series (every column up to dimension 256, an evenly spaced subset of
/// 32 columns above) and must reproduce Q within 1e-8.
PhaseMatrix ppm_phase_matrix(const ComplexMatrix& q, int order);
PhaseMatrix ppm_phase_matrix(const Permutation& q, int order);

/// 2K×2K symplectic permutation sending mode j to mode j+1 (mod K).
SymplecticMap mode_shift_symplectic(int modes);

/// Block-diagonal single-mode rotations S_rot(φ) on every mode.
RealMatrix phase_rotation_matrix(int modes, double phi);

struct GusViolation {
  int index;            // state index, or −1 for the symmetry order check
  std::string what;
  double deviation;
};

struct GusReport {
  bool passed = true;
  double order_residual = 0.0;
  double max_deviation = 0.0;
  std::vector<GusViolation> violations;
};

/// Checks sym^K = identity and state_i = sym^i(state_0) for every i.
/// Hilbert kind compares vectors up to global phase (1 − |⟨u|v⟩| ≤ tol).
GusReport verify_gus(const Constellation& c, const SymmetryDescriptor& sym, double tol = 1e-9);

struct ClosureReport {
  bool passed = false;
  bool e_commutes = false;
  bool f_isotropic = false;
  bool samples_commute = false;
  double max_commutator = 0.0;
  double f_anisotropy = 0.0;
  double max_sample_deviation = 0.0;
};

/// Rotation angles {2πk/K} plus `random_angles` uniform draws from a fixed seed.
std::vector<double> closure_grid(int order, int random_angles = 8, std::uint64_t seed = 2024);

/// Gaussian-channel closure under phase rotations: E commutes with every
/// Σ(φ) on the grid, F = (Tr F / 2N) I, and on sample states the channel
/// commutes with the rotations on means and covariances.
ClosureReport channel_closure_check(const GaussianChannel& ch, const std::vector<double>& phi_grid,
                                    double tol = 1e-9);

/// Pushes every state through the channel; parameters and vectors are dropped.
Constellation apply_channel(const Constellation& c, const GaussianChannel& ch);

}  // namespace gusq
