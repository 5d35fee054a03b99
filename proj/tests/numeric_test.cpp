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

#include "gusq/numeric.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gusq/error.hpp"
#include "oracles.hpp"

namespace gusq {
namespace {

using testing::max_abs_diff;

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = u(rng);
    for (int j = 0; j < i; ++j) {
      a(i, j) = cplx(u(rng), u(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

ComplexMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) z(i, j) = z(j, i) = cplx(u(rng), u(rng));
  return z;
}

TEST(HermitianEigen, IdentityHasUnitEigenvalues) {
  const HermitianEigen eig = hermitian_eigendecomposition(ComplexMatrix::Identity(3, 3));
  EXPECT_LT(max_abs_diff(eig.values, RealVector::Ones(3)), 1e-15);
  EXPECT_LT(max_abs_diff(ComplexMatrix(eig.vectors.adjoint() * eig.vectors), ComplexMatrix::Identity(3, 3)), 1e-12);
}

TEST(HermitianEigen, DiagonalSortedAscending) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = -1.0;
  const HermitianEigen eig = hermitian_eigendecomposition(a);
  EXPECT_DOUBLE_EQ(eig.values(0), -1.0);
  EXPECT_DOUBLE_EQ(eig.values(1), 2.0);
}

TEST(HermitianEigen, RandomReconstructionAndEigenvalues) {
  std::mt19937_64 rng(11);
  for (int n : {2, 5, 8, 16, 32}) {
    const ComplexMatrix a = random_hermitian(n, rng, 10.0);
    const HermitianEigen eig = hermitian_eigendecomposition(a);
    const ComplexMatrix rebuilt = eig.vectors * eig.values.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
    EXPECT_LT((rebuilt - a).norm() / a.norm(), 1e-12) << "n=" << n;
    EXPECT_LT(max_abs_diff(ComplexMatrix(eig.vectors.adjoint() * eig.vectors), ComplexMatrix::Identity(n, n)), 1e-10);
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(a);
    EXPECT_LT(max_abs_diff(eig.values, ref.eigenvalues()), 1e-10 * std::max(1.0, ref.eigenvalues().cwiseAbs().maxCoeff()));
  }
}

TEST(HermitianEigen, RealSymmetricInputGivesRealVectors) {
  std::mt19937_64 rng(5);
  const ComplexMatrix a = random_hermitian(7, rng).real().cast<cplx>();
  const HermitianEigen eig = hermitian_eigendecomposition(a);
  EXPECT_LT(eig.vectors.imag().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  try {
    hermitian_eigendecomposition(a);
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNumeric);
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(SymmetricEigen, MatchesEigenSolver) {
  std::mt19937_64 rng(3);
  const RealMatrix a = random_hermitian(12, rng).real();
  const SymmetricEigen eig = symmetric_eigendecomposition(a);
  const Eigen::SelfAdjointEigenSolver<RealMatrix> ref(a);
  EXPECT_LT(max_abs_diff(eig.values, ref.eigenvalues()), 1e-12);
  EXPECT_LT(max_abs_diff(RealMatrix(eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose()), a), 1e-12);
}

TEST(MatrixFunction, ExpOfZeroIsIdentity) {
  const ComplexMatrix e = matrix_function_hermitian(ComplexMatrix::Zero(3, 3), [](double x) { return std::exp(x); });
  EXPECT_LT(max_abs_diff(e, ComplexMatrix::Identity(3, 3)), 1e-15);
}

TEST(MatrixFunction, CosOfZeroAndCoshOfOne) {
  const ComplexMatrix c = matrix_function_hermitian(ComplexMatrix::Zero(1, 1), [](double x) { return std::cos(x); });
  EXPECT_DOUBLE_EQ(c(0, 0).real(), 1.0);
  const ComplexMatrix ch = matrix_function_hermitian(ComplexMatrix::Ones(1, 1), [](double x) { return std::cosh(x); });
  EXPECT_NEAR(ch(0, 0).real(), 1.5430806348152437, 1e-15);
}

TEST(MatrixFunction, ExpMatchesReferenceExponential) {
  std::mt19937_64 rng(8);
  const ComplexMatrix h = random_hermitian(6, rng);
  const ComplexMatrix mine = matrix_function_hermitian(h, [](double x) { return std::polar(1.0, x); });
  const ComplexMatrix ref = (cplx(0.0, 1.0) * h).exp();
  EXPECT_LT(max_abs_diff(mine, ref), 1e-12);
}

TEST(Takagi, ZeroMatrix) {
  const Takagi t = takagi_factorization(ComplexMatrix::Zero(3, 3));
  EXPECT_LT(t.singulars.cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(max_abs_diff(ComplexMatrix(t.unitary.adjoint() * t.unitary), ComplexMatrix::Identity(3, 3)), 1e-12);
}

TEST(Takagi, RealDiagonal) {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 0.5;
  z(1, 1) = 1.0;
  const Takagi t = takagi_factorization(z);
  EXPECT_NEAR(t.singulars(0), 0.5, 1e-14);
  EXPECT_NEAR(t.singulars(1), 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(ComplexMatrix(t.unitary * t.singulars.cast<cplx>().asDiagonal() * t.unitary.transpose()), z), 1e-14);
}

TEST(Takagi, RandomReconstruction) {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 3, 6, 10}) {
    const ComplexMatrix z = random_symmetric(n, rng);
    const Takagi t = takagi_factorization(z);
    const ComplexMatrix rebuilt = t.unitary * t.singulars.cast<cplx>().asDiagonal() * t.unitary.transpose();
    EXPECT_LT(max_abs_diff(rebuilt, z), 1e-10) << "n=" << n;
    EXPECT_LT(max_abs_diff(ComplexMatrix(t.unitary.adjoint() * t.unitary), ComplexMatrix::Identity(n, n)), 1e-10);
    EXPECT_GE(t.singulars.minCoeff(), 0.0);
    // Singular values of a complex symmetric matrix equal its ordinary singular values.
    Eigen::JacobiSVD<ComplexMatrix> svd(z);
    RealVector ref = svd.singularValues().reverse();
    EXPECT_LT(max_abs_diff(t.singulars, ref), 1e-10);
  }
}

TEST(Takagi, DegenerateSingularValues) {
  // e^{iθ} times a unitary symmetric matrix: all singular values equal.
  ComplexMatrix z(2, 2);
  z << cplx(0.0, 1.0), 1.0, 1.0, cplx(0.0, 1.0);
  const Takagi t = takagi_factorization(z);
  EXPECT_LT(max_abs_diff(ComplexMatrix(t.unitary * t.singulars.cast<cplx>().asDiagonal() * t.unitary.transpose()), z), 1e-12);
  EXPECT_NEAR(t.singulars(0), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(t.singulars(1), std::sqrt(2.0), 1e-12);
}

TEST(Takagi, RejectsNonSymmetric) {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 1) = 1.0;
  EXPECT_THROW(takagi_factorization(z), Error);
}

TEST(Dft, SmallOrders) {
  EXPECT_LT(max_abs_diff(dft_matrix(1), ComplexMatrix::Ones(1, 1)), 1e-15);
  ComplexMatrix w2(2, 2);
  w2 << 1.0, 1.0, 1.0, -1.0;
  EXPECT_LT(max_abs_diff(dft_matrix(2), ComplexMatrix(w2 / std::sqrt(2.0))), 1e-15);
}

TEST(Dft, UnitaryAndOnesMapToFirstBasisVector) {
  for (int k : {3, 4, 7, 16}) {
    const ComplexMatrix w = dft_matrix(k);
    EXPECT_LT(max_abs_diff(ComplexMatrix(w * w.adjoint()), ComplexMatrix::Identity(k, k)), 1e-12);
    const ComplexVector image = w * ComplexVector::Ones(k);
    EXPECT_LT(max_abs_diff(image, ComplexVector(std::sqrt(static_cast<double>(k)) * ComplexVector::Unit(k, 0))), 1e-12);
  }
}

TEST(SkewBlock, SymplecticFormIsItsOwnBlock) {
  const RealMatrix om = testing::omega(1);
  const SkewBlockForm f = skew_block_diagonalize(om);
  EXPECT_NEAR(f.blocks(0), 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(f.orthogonal, RealMatrix::Identity(2, 2)), 1e-15);
}

TEST(SkewBlock, ZeroMatrix) {
  const SkewBlockForm f = skew_block_diagonalize(RealMatrix::Zero(4, 4));
  EXPECT_LT(f.blocks.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SkewBlock, RandomReconstruction) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n : {2, 6, 10, 20}) {
    RealMatrix m = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        m(i, j) = u(rng);
        m(j, i) = -m(i, j);
      }
    const SkewBlockForm f = skew_block_diagonalize(m);
    RealMatrix blocks = RealMatrix::Zero(n, n);
    for (int k = 0; k < n / 2; ++k) {
      blocks(2 * k, 2 * k + 1) = f.blocks(k);
      blocks(2 * k + 1, 2 * k) = -f.blocks(k);
    }
    EXPECT_LT((f.orthogonal * blocks * f.orthogonal.transpose() - m).norm() / m.norm(), 1e-12) << "n=" << n;
    EXPECT_LT(max_abs_diff(RealMatrix(f.orthogonal.transpose() * f.orthogonal), RealMatrix::Identity(n, n)), 1e-12);
    EXPECT_GE(f.blocks.minCoeff(), 0.0);
  }
}

TEST(SkewBlock, OddDimensionRejected) { EXPECT_THROW(skew_block_diagonalize(RealMatrix::Zero(3, 3)), Error); }

TEST(Expm, MatchesReferenceExponential) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  ComplexMatrix x(6, 6);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = cplx(u(rng), u(rng));
  const ComplexMatrix ref = x.exp();
  EXPECT_LT(max_abs_diff(expm_taylor(x), ref) / ref.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(HermitianEigen, Dimension64Reconstructs) {
  std::mt19937_64 rng(99);
  const ComplexMatrix a = random_hermitian(64, rng, 10.0);
  const HermitianEigen eig = hermitian_eigendecomposition(a);
  const ComplexMatrix rebuilt = eig.vectors * eig.values.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  EXPECT_LT((rebuilt - a).norm() / a.norm(), 1e-9);
}

}  // namespace
}  // namespace gusq
