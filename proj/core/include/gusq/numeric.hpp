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

// Dense small-matrix kernels shared by the rest of the library: a cyclic
// Jacobi eigensolver for Hermitian matrices, matrix functions built on it,
// Takagi factorization of complex symmetric matrices, real skew-symmetric
// block diagonalization, the unitary DFT matrix and a Taylor matrix
// exponential. Everything here is a pure function of its arguments.

#pragma once

#include <complex>
#include <type_traits>

#include <Eigen/Dense>

namespace gusq {

using cplx = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Default absolute tolerance for Hermitian/symmetric/skew structure checks.
inline constexpr double kStructureTol = 1e-10;

double max_abs(const RealMatrix& m);
double max_abs(const ComplexMatrix& m);

/// ‖A − A*‖_max.
double hermitian_defect(const ComplexMatrix& a);
/// ‖Z − Zᵀ‖_max.
double symmetric_defect(const ComplexMatrix& z);
/// ‖M + Mᵀ‖_max.
double skew_defect(const RealMatrix& m);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns, unitary
};

struct SymmetricEigen {
  RealVector values;    // ascending
  RealMatrix vectors;   // columns, orthogonal
};

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// 1e-13·‖A‖_F. Each eigenvector is phased so that its first
/// largest-magnitude component is real and positive.
/// Throws Error(kNumeric) when ‖A − A*‖_max > tol.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& a, double tol = kStructureTol);

/// Real-arithmetic variant of the above for real symmetric input.
SymmetricEigen symmetric_eigendecomposition(const RealMatrix& a, double tol = kStructureTol);

/// U f(Λ) U* for Hermitian A. `f` maps a real eigenvalue to a real or complex number.
template <class F>
ComplexMatrix matrix_function_hermitian(const ComplexMatrix& a, F&& f, double tol = kStructureTol) {
  const HermitianEigen eig = hermitian_eigendecomposition(a, tol);
  ComplexVector fl(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) fl(i) = cplx(f(eig.values(i)));
  return eig.vectors * fl.asDiagonal() * eig.vectors.adjoint();
}

/// U f(Λ) Uᵀ for real symmetric A with real-valued f.
template <class F>
RealMatrix matrix_function_symmetric(const RealMatrix& a, F&& f, double tol = kStructureTol) {
  const SymmetricEigen eig = symmetric_eigendecomposition(a, tol);
  RealVector fl(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) fl(i) = f(eig.values(i));
  return eig.vectors * fl.asDiagonal() * eig.vectors.transpose();
}

struct Takagi {
  RealVector singulars;  // nonnegative, ascending
  ComplexMatrix unitary;
};

/// Z = U diag(s) Uᵀ for complex symmetric Z.
///
/// Computed from the real symmetric embedding [[Re Z, Im Z], [Im Z, −Re Z]],
/// whose eigenpairs (s, [a; b]) with s ≥ 0 yield Takagi vectors a + ib. This
/// handles repeated singular values without a separate phase-fixing pass.
Takagi takagi_factorization(const ComplexMatrix& z, double tol = kStructureTol);

/// W = K^{-1/2} [W_K^{-rs}], W_K = e^{i2π/K}.
ComplexMatrix dft_matrix(int k);

struct SkewBlockForm {
  RealVector blocks;       // m_i ≥ 0, ascending
  RealMatrix orthogonal;   // O with Oᵀ M O = ⊕ [[0, m_i], [−m_i, 0]]
};

/// Block-diagonalizes a real skew-symmetric matrix of even dimension.
SkewBlockForm skew_block_diagonalize(const RealMatrix& m, double tol = kStructureTol);

/// exp(X) by scaling and squaring with a plain Taylor series; the series stops
/// once a term's max-norm falls below 1e-16 times the partial sum's.
ComplexMatrix expm_taylor(const ComplexMatrix& x);

}  // namespace gusq
