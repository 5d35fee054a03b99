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

#include "gusq/fock_oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "gusq/error.hpp"
#include "oracles.hpp"

namespace gusq {
namespace {

using testing::max_abs_diff;

TEST(Ladder, ActionOnLowLevels) {
  const LadderOperators l = ladder_operators(10);
  const FockVector vac = FockVector::vacuum(10);
  EXPECT_LT(l.lower.apply(vac).amplitudes.norm(), 1e-15);
  EXPECT_LT(max_abs_diff(l.raise.apply(vac).amplitudes, FockVector::number(1, 10).amplitudes), 1e-15);
}

TEST(Ladder, CommutatorAwayFromEdge) {
  const int dim = 12;
  const LadderOperators l = ladder_operators(dim);
  const ComplexMatrix comm = l.lower.matrix * l.raise.matrix - l.raise.matrix * l.lower.matrix;
  EXPECT_LT(max_abs_diff(ComplexMatrix(comm.topLeftCorner(dim - 1, dim - 1)), ComplexMatrix::Identity(dim - 1, dim - 1)), 1e-14);
}

TEST(Displacement, ZeroIsIdentity) {
  EXPECT_LT(max_abs_diff(fock_displacement(0.0, 20).matrix, ComplexMatrix::Identity(20, 20)), 1e-15);
}

TEST(Displacement, VacuumAmplitude) {
  const FockOperator d = fock_displacement(1.0);
  EXPECT_NEAR(std::abs(d.matrix(0, 0) - std::exp(-0.5)), 0.0, 1e-10);
}

TEST(Displacement, PhotonNumber) {
  for (cplx alpha : {cplx(1.0, 0.0), cplx(0.5, -1.5), cplx(2.0, 1.0)}) {
    const SingleModeParams p{0.0, 0.0, alpha};
    const int dim = required_dimension(p, 1e-12);
    EXPECT_NEAR(fock_photon_number(fock_state(p, dim)), std::norm(alpha), 1e-9);
  }
}

TEST(Squeeze, ZeroIsIdentity) {
  EXPECT_LT(max_abs_diff(fock_squeeze(0.0, 20).matrix, ComplexMatrix::Identity(20, 20)), 1e-15);
}

TEST(Squeeze, PhotonNumber) {
  for (double r : {0.3, 0.8, 1.2, 1.5}) {
    const SingleModeParams p{r, 0.7, 0.0};
    const int dim = required_dimension(p, 1e-12);
    const double s = std::sinh(r);
    EXPECT_NEAR(fock_photon_number(fock_state(p, dim)), s * s, 1e-8) << "r=" << r;
  }
}

TEST(Squeeze, OperatorMatchesReferenceExponential) {
  const int dim = 40;
  const cplx z = std::polar(0.6, 1.2);
  const ComplexMatrix a = testing::annihilation(dim);
  const ComplexMatrix ref = (0.5 * (z * a.adjoint() * a.adjoint() - std::conj(z) * a * a)).exp();
  EXPECT_LT(max_abs_diff(fock_squeeze(z, dim).matrix, ref), 1e-12);
}

TEST(Squeeze, OperatorsAreUnitary) {
  const FockOperator s = fock_squeeze(std::polar(1.2, 0.3));
  EXPECT_LE(s.unitarity_defect(), std::max(10.0 * s.tail_mass, 1e-12));
  const FockOperator d = fock_displacement(cplx(1.5, 0.5));
  EXPECT_LE(d.unitarity_defect(), std::max(10.0 * d.tail_mass, 1e-12));
}

TEST(Squeeze, LargeSqueezeNeedsLargerTruncation) {
  try {
    fock_squeeze(3.0);
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncation);
    ASSERT_TRUE(e.suggested_dim().has_value());
    EXPECT_GT(*e.suggested_dim(), kDefaultFockDim);
    EXPECT_NO_THROW(fock_state({3.0, 0.0, 0.0}, *e.suggested_dim()));
  }
}

TEST(Rotation, Basics) {
  EXPECT_LT(max_abs_diff(fock_rotation(0.0, 15).matrix, ComplexMatrix::Identity(15, 15)), 1e-15);
  EXPECT_LT(max_abs_diff(fock_rotation(2 * kPi, 15).matrix, ComplexMatrix::Identity(15, 15)), 1e-12);
  const FockVector vac = FockVector::vacuum(15);
  EXPECT_LT(max_abs_diff(fock_rotation(0.77, 15).apply(vac).amplitudes, vac.amplitudes), 1e-15);
}

TEST(Rotation, RotatesSqueezePhaseAndDisplacement) {
  // R(φ) D(α) S(z)|0⟩ = D(e^{iφ}α) S(e^{2iφ}z)|0⟩ in Fock space.
  const double phi = 0.9;
  const SingleModeParams p{0.5, 0.4, cplx(0.8, 0.1)};
  const SingleModeParams q{0.5, 0.4 + 2 * phi, std::polar(1.0, phi) * p.alpha};
  const ComplexVector lhs = fock_rotation(phi).apply(fock_state(p)).amplitudes;
  EXPECT_LT(max_abs_diff(lhs, fock_state(q).amplitudes), 1e-10);
}

TEST(OracleOverlap, Basics) {
  const SingleModeParams p{0.8, 2.0, cplx(0.5, 0.5)};
  EXPECT_NEAR(std::abs(oracle_overlap(p, p).value - cplx(1.0, 0.0)), 0.0, 1e-10);
  const SingleModeParams coh{0.0, 0.0, cplx(1.2, -0.3)};
  EXPECT_NEAR(std::abs(oracle_overlap(SingleModeParams::vacuum(), coh).value), std::exp(-std::norm(coh.alpha) / 2), 1e-12);
}

TEST(OracleOverlap, MatchesYuenOnStandardGrid) {
  for (double r : {0.0, 0.3, 0.8, 1.2})
    for (double theta : {0.0, kPi / 2, kPi})
      for (double alpha : {0.0, 0.5, 1.5}) {
        const SingleModeParams p{r, theta, alpha};
        const OracleOverlap o = oracle_overlap(SingleModeParams::vacuum(), p, kDefaultFockDim);
        EXPECT_NEAR(std::abs(o.value), std::abs(yuen_inner_product(SingleModeParams::vacuum(), p)), 1e-8);
        EXPECT_LE(o.truncation_error, kOverlapConvergenceTol);
      }
}

TEST(OracleOverlap, PhotonNumbersOnStandardGrid) {
  for (double r : {0.0, 0.3, 0.8, 1.2})
    for (double theta : {0.0, kPi / 2, kPi})
      for (double alpha : {0.0, 0.5, 1.5}) {
        const SingleModeParams p{r, theta, alpha};
        const int dim = required_dimension(p, 1e-12);
        EXPECT_NEAR(fock_photon_number(fock_state(p, dim)), symbol_photon_number(r, alpha), 1e-8);
      }
}

TEST(Kron, VacuumAndNorms) {
  const FockVector vac = FockVector::vacuum(3);
  const std::vector<FockVector> two{vac, vac};
  EXPECT_LT(max_abs_diff(kron_state(two).amplitudes, FockVector::vacuum(9).amplitudes), 1e-15);

  FockVector a{ComplexVector::Constant(3, cplx(0.5, 0.5))};
  FockVector b{ComplexVector::Constant(4, cplx(2.0, 0.0))};
  const std::vector<FockVector> ab{a, b};
  EXPECT_NEAR(kron_state(ab).norm(), a.norm() * b.norm(), 1e-14);
}

TEST(Kron, ModeZeroIsFastestDigit) {
  const std::vector<FockVector> modes{FockVector::number(1, 3), FockVector::number(2, 3)};
  // index = x0 + 3 x1 = 1 + 6
  EXPECT_LT(max_abs_diff(kron_state(modes).amplitudes, FockVector::number(7, 9).amplitudes), 1e-15);
}

TEST(Kron, PpmWordOverlapsReproduceGram) {
  const SingleModeParams sig{0.3, kPi, 0.8};
  const int dim = 30;
  const FockVector s = fock_state(sig, dim);
  const FockVector v = FockVector::vacuum(dim);
  std::vector<FockVector> words;
  for (int i = 0; i < 3; ++i) {
    std::vector<FockVector> modes{v, v, v};
    modes[static_cast<std::size_t>(i)] = s;
    words.push_back(kron_state(modes));
  }
  const double gamma = gamma_vacuum_overlap(sig.r, sig.theta, sig.alpha.real());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(std::abs(words[i].amplitudes.dot(words[j].amplitudes)), i == j ? 1.0 : gamma, 1e-8);
}

TEST(Kron, DimensionCap) {
  const FockVector big = FockVector::vacuum(400);
  const std::vector<FockVector> modes{big, big};
  try {
    kron_state(modes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
}

}  // namespace
}  // namespace gusq
