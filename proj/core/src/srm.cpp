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

#include "gusq/srm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gusq/error.hpp"
#include "gusq/overlaps.hpp"

namespace gusq {
namespace {

constexpr double kHermitianTol = 1e-10;

// Clamps tiny negative eigenvalues and rejects genuinely negative ones.
double checked_eigenvalue(double lambda) {
  if (lambda < -kInvalidGramTol) {
    std::ostringstream msg;
    msg << "Gram matrix is not positive semidefinite (eigenvalue " << lambda << ")";
    throw Error(ErrorCode::kInvalidGram, msg.str());
  }
  return std::max(lambda, 0.0);
}

int rank_of(const std::vector<double>& lambdas) {
  const double top = lambdas.empty() ? 0.0 : *std::max_element(lambdas.begin(), lambdas.end());
  return static_cast<int>(std::count_if(lambdas.begin(), lambdas.end(),
                                        [&](double l) { return l > kPseudoInverseRelTol * top && l > 0.0; }));
}

// Square roots of the spectrum. Eigenvalues at or below the rank threshold are
// roundoff around an exact zero; their roots (~1e-8) would otherwise leak into G^{1/2}.
ComplexVector spectral_roots(const std::vector<double>& lambdas) {
  const double top = lambdas.empty() ? 0.0 : *std::max_element(lambdas.begin(), lambdas.end());
  ComplexVector roots(static_cast<Eigen::Index>(lambdas.size()));
  for (std::size_t p = 0; p < lambdas.size(); ++p)
    roots(static_cast<Eigen::Index>(p)) = lambdas[p] > kPseudoInverseRelTol * top ? std::sqrt(lambdas[p]) : 0.0;
  return roots;
}

}  // namespace

GramMatrix::GramMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw Error(ErrorCode::kInvalidGram, "Gram matrix must be square and nonempty");
  if (!entries_.allFinite()) throw Error(ErrorCode::kInvalidGram, "Gram matrix entries must be finite");
  const double defect = hermitian_defect(entries_);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "Gram matrix is not Hermitian (defect " << defect << ")";
    throw Error(ErrorCode::kInvalidGram, msg.str());
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();
}

GramMatrix GramMatrix::constant_offdiagonal(int order, cplx gamma) {
  if (order < 1) throw Error(ErrorCode::kInvalidGram, "Gram order must be positive");
  ComplexMatrix g = ComplexMatrix::Constant(order, order, gamma);
  for (int i = 0; i < order; ++i) g(i, i) = 1.0;
  return GramMatrix(std::move(g));
}

GramMatrix GramMatrix::circulant(const ComplexVector& first_row) {
  const Eigen::Index k = first_row.size();
  if (k == 0) throw Error(ErrorCode::kInvalidGram, "circulant row must be nonempty");
  ComplexMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = first_row(((j - i) % k + k) % k);
  return GramMatrix(std::move(g));
}

const char* to_string(SrmPath path) { return path == SrmPath::kCirculant ? "circulant" : "generic"; }

GramMatrix gram_from_constellation(const Constellation& c) {
  const auto& params = c.params();
  const int k = c.order();
  ComplexMatrix g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      g(i, j) = multimode_gram_entry(params[static_cast<std::size_t>(i)], params[static_cast<std::size_t>(j)]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return GramMatrix(std::move(g));
}

DetectionReport srm_generic(const GramMatrix& g) {
  const int k = g.order();
  const HermitianEigen eig = hermitian_eigendecomposition(g.entries());

  DetectionReport report;
  report.path = SrmPath::kGeneric;
  for (int p = 0; p < k; ++p) report.lambdas.push_back(checked_eigenvalue(eig.values(p)));
  const ComplexVector roots = spectral_roots(report.lambdas);
  report.rank = rank_of(report.lambdas);

  const ComplexMatrix sqrt_g = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  report.transition = sqrt_g.cwiseAbs2();
  double pc = 0.0;
  for (int i = 0; i < k; ++i) pc += report.transition(i, i);
  report.pc = pc / k;
  report.pe = 1.0 - report.pc;
  return report;
}

DetectionReport srm_circulant(const ComplexVector& first_row) {
  const Eigen::Index k = first_row.size();
  if (k == 0) throw Error(ErrorCode::kInvalidGram, "circulant row must be nonempty");
  // W^{−m} with W = e^{i2π/K}
  auto w_inv = [k](Eigen::Index m) { return std::polar(1.0, -2.0 * kPi * static_cast<double>(m % k) / static_cast<double>(k)); };

  DetectionReport report;
  report.path = SrmPath::kCirculant;
  const double scale = std::max(1.0, first_row.cwiseAbs().maxCoeff());
  for (Eigen::Index p = 0; p < k; ++p) {
    cplx lambda = 0.0;
    for (Eigen::Index q = 0; q < k; ++q) lambda += first_row(q) * w_inv(p * q);
    if (std::abs(lambda.imag()) > kHermitianTol * scale * static_cast<double>(k)) {
      std::ostringstream msg;
      msg << "circulant row is not Hermitian (imaginary eigenvalue part " << lambda.imag() << ")";
      throw Error(ErrorCode::kInvalidGram, msg.str());
    }
    report.lambdas.push_back(checked_eigenvalue(lambda.real()));
  }
  const ComplexVector roots = spectral_roots(report.lambdas);
  report.rank = rank_of(report.lambdas);

  // Row 0 of G^{1/2}: c_d = (1/K) Σ_p √λ_p W^{−pd}, with (G^{1/2})_ij = c_{(i−j) mod K}.
  ComplexVector c(k);
  for (Eigen::Index d = 0; d < k; ++d) {
    cplx sum = 0.0;
    for (Eigen::Index p = 0; p < k; ++p) sum += roots(p) * w_inv(p * d);
    c(d) = sum / static_cast<double>(k);
  }
  report.transition.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) report.transition(i, j) = std::norm(c(((i - j) % k + k) % k));

  const double mean_root = roots.real().sum() / static_cast<double>(k);
  report.pc = mean_root * mean_root;
  report.pe = 1.0 - report.pc;
  return report;
}

double circulant_deviation(const GramMatrix& g) {
  const ComplexMatrix& m = g.entries();
  const Eigen::Index k = m.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) worst = std::max(worst, std::abs(m(i, j) - m(0, ((j - i) % k + k) % k)));
  return worst;
}

bool is_circulant(const GramMatrix& g) { return circulant_deviation(g) < kCirculantTol; }

DetectionReport srm_auto(const GramMatrix& g) {
  return is_circulant(g) ? srm_circulant(g.first_row()) : srm_generic(g);
}

MeasurementVectors measurement_vectors(const GramMatrix& g) {
  const int k = g.order();
  const HermitianEigen eig = hermitian_eigendecomposition(g.entries());
  std::vector<double> lambdas;
  for (int p = 0; p < k; ++p) lambdas.push_back(checked_eigenvalue(eig.values(p)));
  const double top = *std::max_element(lambdas.begin(), lambdas.end());

  MeasurementVectors out;
  ComplexVector inv_roots = ComplexVector::Zero(k);
  ComplexVector support = ComplexVector::Zero(k);
  for (int p = 0; p < k; ++p) {
    if (lambdas[static_cast<std::size_t>(p)] > kPseudoInverseRelTol * top && lambdas[static_cast<std::size_t>(p)] > 0.0) {
      inv_roots(p) = 1.0 / std::sqrt(lambdas[static_cast<std::size_t>(p)]);
      support(p) = 1.0;
      ++out.rank;
    }
  }
  out.coefficients = eig.vectors * inv_roots.asDiagonal() * eig.vectors.adjoint();
  const ComplexMatrix projector = eig.vectors * support.asDiagonal() * eig.vectors.adjoint();
  out.resolution_residual = max_abs(ComplexMatrix(out.coefficients * g.entries() * out.coefficients - projector));
  return out;
}

}  // namespace gusq
