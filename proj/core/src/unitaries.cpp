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

#include "gusq/unitaries.hpp"

#include <cmath>

#include "gusq/error.hpp"

namespace gusq {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kNumeric, what);
}

}  // namespace

DisplacementParams::DisplacementParams(ComplexVector a) : alpha(std::move(a)) {
  require(alpha.size() > 0, "displacement needs at least one mode");
  require(alpha.allFinite(), "displacement amplitudes must be finite");
}

RotationParams::RotationParams(ComplexMatrix p) : phi(std::move(p)) {
  require(phi.rows() > 0 && phi.rows() == phi.cols(), "rotation generator must be square");
  require(hermitian_defect(phi) <= kStructureTol, "rotation generator must be Hermitian");
}

RotationParams RotationParams::uniform(int modes, double angle) {
  return RotationParams(angle * ComplexMatrix::Identity(modes, modes));
}

SqueezeParams::SqueezeParams(ComplexMatrix zz) : z(std::move(zz)) {
  require(z.rows() > 0 && z.rows() == z.cols(), "squeeze matrix must be square");
  require(symmetric_defect(z) <= kStructureTol, "squeeze matrix must be symmetric");
}

RealMatrix complex_linear_to_real(const ComplexMatrix& c, const ComplexMatrix& d) {
  const Eigen::Index n = c.rows();
  RealMatrix s(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const cplx cj = c(j, k);
      const cplx dj = d(j, k);
      s(2 * j, 2 * k) = cj.real() + dj.real();
      s(2 * j, 2 * k + 1) = -cj.imag() + dj.imag();
      s(2 * j + 1, 2 * k) = cj.imag() + dj.imag();
      s(2 * j + 1, 2 * k + 1) = cj.real() - dj.real();
    }
  }
  return s;
}

RealVector displacement_vector(const ComplexVector& alpha) {
  RealVector d(2 * alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    d(2 * i) = 2.0 * alpha(i).real();
    d(2 * i + 1) = 2.0 * alpha(i).imag();
  }
  return d;
}

SymplecticMap displacement_map(const DisplacementParams& p) {
  const int n = p.modes();
  return SymplecticMap(RealMatrix::Identity(2 * n, 2 * n), displacement_vector(p.alpha));
}

ComplexMatrix rotation_unitary(const RotationParams& p) {
  return matrix_function_hermitian(p.phi, [](double x) { return std::polar(1.0, x); });
}

SymplecticMap rotation_map(const RotationParams& p) {
  const int n = p.modes();
  return SymplecticMap(complex_linear_to_real(rotation_unitary(p), ComplexMatrix::Zero(n, n)),
                       RealVector::Zero(2 * n));
}

Bogoliubov squeeze_bogoliubov(const SqueezeParams& p) {
  const Takagi tk = takagi_factorization(p.z);
  const RealVector ch = tk.singulars.array().cosh();
  const RealVector sh = tk.singulars.array().sinh();
  return Bogoliubov{tk.unitary * ch.cast<cplx>().asDiagonal() * tk.unitary.adjoint(),
                    tk.unitary * sh.cast<cplx>().asDiagonal() * tk.unitary.transpose()};
}

SymplecticMap squeeze_map(const SqueezeParams& p) {
  const Bogoliubov b = squeeze_bogoliubov(p);
  return SymplecticMap(complex_linear_to_real(b.c, b.d), RealVector::Zero(2 * p.modes()));
}

SymplecticMap compose(std::span<const SymplecticMap> maps) {
  require(!maps.empty(), "compose needs at least one map");
  RealMatrix s = maps.front().s();
  RealVector d = maps.front().d();
  for (const SymplecticMap& m : maps.subspan(1)) {
    require(m.modes() == maps.front().modes(), "cannot compose maps with different mode counts");
    d = m.s() * d + m.d();
    s = m.s() * s;
  }
  return SymplecticMap(std::move(s), std::move(d));
}

SymplecticMap compose(std::initializer_list<SymplecticMap> maps) {
  return compose(std::span<const SymplecticMap>(maps.begin(), maps.size()));
}

ComplexVector switch_displacement_squeeze(const DisplacementParams& alpha, const SqueezeParams& z) {
  require(alpha.modes() == z.modes(), "displacement and squeeze mode counts differ");
  const Bogoliubov b = squeeze_bogoliubov(z);
  return b.c * alpha.alpha - b.d * alpha.alpha.conjugate();
}

ComplexMatrix switch_rotation_squeeze(const SqueezeParams& z, const RotationParams& phi) {
  require(z.modes() == phi.modes(), "squeeze and rotation mode counts differ");
  const ComplexMatrix u = rotation_unitary(phi);
  // e^{−iφ} = u†, e^{−iφᵀ} = conj(u) for Hermitian φ.
  return u.adjoint() * z.z * u.conjugate();
}

ComplexVector switch_rotation_displacement(const DisplacementParams& alpha, const RotationParams& phi) {
  require(alpha.modes() == phi.modes(), "displacement and rotation mode counts differ");
  return rotation_unitary(phi).adjoint() * alpha.alpha;
}

GaussianState generate_pure_state(const SqueezeParams& z, const DisplacementParams& alpha) {
  require(alpha.modes() == z.modes(), "displacement and squeeze mode counts differ");
  return apply_symplectic(GaussianState::vacuum(z.modes()), compose({squeeze_map(z), displacement_map(alpha)}));
}

GaussianState generate_mixed_state(const SqueezeParams& z, const RotationParams& phi, const DisplacementParams& alpha,
                                   std::span<const double> nu) {
  require(static_cast<int>(nu.size()) == z.modes() && phi.modes() == z.modes() && alpha.modes() == z.modes(),
          "parameter mode counts differ");
  return apply_symplectic(thermal_state(nu), compose({squeeze_map(z), rotation_map(phi), displacement_map(alpha)}));
}

}  // namespace gusq
