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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "gusq/error.hpp"

namespace gusq {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiRelTol = 1e-13;

template <class T>
T conj_of(const T& x) {
  if constexpr (std::is_same_v<T, cplx>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Zeroes the off-diagonal of a Hermitian (or real symmetric) matrix in place
// and accumulates the rotations into v, so that on return a_in = v a v*.
template <class Scalar>
void jacobi_diagonalize(Mat<Scalar>& a, Mat<Scalar>& v) {
  const Eigen::Index n = a.rows();
  v = Mat<Scalar>::Identity(n, n);
  const double norm = a.norm();
  if (norm == 0.0) return;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) < kJacobiRelTol * norm) return;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Scalar phase = apq / mag;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G = diag(1, conj(phase)) · [[c, s], [−s, c]]
        const Scalar gpp = c;
        const Scalar gpq = s;
        const Scalar gqp = -s * conj_of(phase);
        const Scalar gqq = c * conj_of(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = conj_of(gpp) * apk + conj_of(gqp) * aqk;
          a(q, k) = conj_of(gpq) * apk + conj_of(gqq) * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = Scalar(std::real(a(p, p)));
        a(q, q) = Scalar(std::real(a(q, q)));

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  throw Error(ErrorCode::kNumeric, "Jacobi eigensolver did not converge");
}

template <class Scalar>
void sort_and_phase(const Mat<Scalar>& diag_form, Mat<Scalar>& vectors, RealVector& values_out,
                    Mat<Scalar>& vectors_out) {
  const Eigen::Index n = diag_form.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::real(diag_form(i, i)) < std::real(diag_form(j, j));
  });

  values_out.resize(n);
  vectors_out.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = order[static_cast<std::size_t>(c)];
    values_out(c) = std::real(diag_form(src, src));
    auto col = vectors.col(src);
    const double biggest = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(col(k)) >= biggest * (1.0 - 1e-9)) {
        pivot = k;
        break;
      }
    }
    const Scalar unit = conj_of(col(pivot)) / std::abs(col(pivot));
    vectors_out.col(c) = col * unit;
  }
}

void require_structure(double defect, double tol, const char* what) {
  if (defect > tol) {
    std::ostringstream msg;
    msg << what << " check failed: max deviation " << defect << " exceeds tolerance " << tol;
    throw Error(ErrorCode::kNumeric, msg.str());
  }
}

}  // namespace

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermitian_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(ComplexMatrix(a - a.adjoint()));
}

double symmetric_defect(const ComplexMatrix& z) {
  if (z.rows() != z.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(ComplexMatrix(z - z.transpose()));
}

double skew_defect(const RealMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(RealMatrix(m + m.transpose()));
}

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& a, double tol) {
  require_structure(hermitian_defect(a), tol, "Hermitian");
  ComplexMatrix work = 0.5 * (a + a.adjoint());
  ComplexMatrix v;
  jacobi_diagonalize(work, v);
  HermitianEigen out;
  sort_and_phase(work, v, out.values, out.vectors);
  return out;
}

SymmetricEigen symmetric_eigendecomposition(const RealMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kNumeric, "symmetric eigendecomposition needs a square matrix");
  require_structure(max_abs(RealMatrix(a - a.transpose())), tol, "Symmetric");
  RealMatrix work = 0.5 * (a + a.transpose());
  RealMatrix v;
  jacobi_diagonalize(work, v);
  SymmetricEigen out;
  sort_and_phase(work, v, out.values, out.vectors);
  return out;
}

Takagi takagi_factorization(const ComplexMatrix& z, double tol) {
  require_structure(symmetric_defect(z), tol, "Complex symmetric");
  const Eigen::Index n = z.rows();
  const ComplexMatrix zs = 0.5 * (z + z.transpose());
  const RealMatrix x = zs.real();
  const RealMatrix y = zs.imag();

  RealMatrix embed(2 * n, 2 * n);
  embed << x, y, y, -x;
  const SymmetricEigen eig = symmetric_eigendecomposition(embed);

  const double zero_tol = 1e-12 * std::max(1.0, max_abs(zs));
  // Swap map J[a; b] = [−b; a] sends the +s eigenvector to the −s one.
  auto swap_map = [n](const RealVector& v) {
    RealVector out(2 * n);
    out.head(n) = -v.tail(n);
    out.tail(n) = v.head(n);
    return out;
  };

  std::vector<RealVector> accepted;
  std::vector<double> values;
  for (Eigen::Index idx = 2 * n - 1; idx >= 0 && static_cast<Eigen::Index>(accepted.size()) < n; --idx) {
    if (eig.values(idx) < -zero_tol) break;
    RealVector v = eig.vectors.col(idx);
    for (const RealVector& u : accepted) {
      v -= u.dot(v) * u;
      const RealVector ju = swap_map(u);
      v -= ju.dot(v) * ju;
    }
    const double nv = v.norm();
    if (nv < 0.5) continue;
    accepted.push_back(v / nv);
    values.push_back(std::max(eig.values(idx), 0.0));
  }
  if (static_cast<Eigen::Index>(accepted.size()) != n) {
    throw Error(ErrorCode::kNumeric, "Takagi factorization failed to assemble a full unitary");
  }

  Takagi out;
  out.singulars.resize(n);
  out.unitary.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const std::size_t src = static_cast<std::size_t>(n - 1 - c);
    const RealVector& v = accepted[src];
    out.singulars(c) = values[src];
    for (Eigen::Index k = 0; k < n; ++k) out.unitary(k, c) = cplx(v(k), v(n + k));
  }
  return out;
}

ComplexMatrix dft_matrix(int k) {
  if (k < 1) throw Error(ErrorCode::kNumeric, "DFT order must be positive");
  ComplexMatrix w(k, k);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s)
      w(r, s) = scale * std::polar(1.0, -2.0 * kPi * static_cast<double>((r * s) % k) / k);
  return w;
}

SkewBlockForm skew_block_diagonalize(const RealMatrix& m, double tol) {
  require_structure(skew_defect(m), tol, "Skew-symmetric");
  const Eigen::Index dim = m.rows();
  if (dim % 2 != 0) throw Error(ErrorCode::kNumeric, "skew block form needs an even dimension");
  const Eigen::Index n = dim / 2;

  const RealMatrix ms = 0.5 * (m - m.transpose());
  const ComplexMatrix herm = cplx(0.0, 1.0) * ms.cast<cplx>();
  const HermitianEigen eig = hermitian_eigendecomposition(herm);
  const double zero_tol = 1e-12 * std::max(1.0, max_abs(ms));

  std::vector<std::pair<RealVector, RealVector>> positive;
  std::vector<double> positive_m;
  for (Eigen::Index idx = n; idx < dim; ++idx) {
    if (eig.values(idx) <= zero_tol) continue;
    const ComplexVector u = eig.vectors.col(idx);
    positive.emplace_back(std::sqrt(2.0) * u.imag(), std::sqrt(2.0) * u.real());
    positive_m.push_back(eig.values(idx));
  }

  // Kernel: real orthonormal complement of the positive-block columns.
  std::vector<RealVector> basis;
  for (const auto& [e1, e2] : positive) {
    basis.push_back(e1);
    basis.push_back(e2);
  }
  std::vector<RealVector> kernel;
  const std::size_t kernel_size = static_cast<std::size_t>(dim) - basis.size();
  while (kernel.size() < kernel_size) {
    RealVector best;
    double best_norm = -1.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      RealVector v = RealVector::Unit(dim, k);
      for (int pass = 0; pass < 2; ++pass) {
        for (const RealVector& b : basis) v -= b.dot(v) * b;
        for (const RealVector& b : kernel) v -= b.dot(v) * b;
      }
      const double nv = v.norm();
      if (nv > best_norm + 1e-12) {
        best_norm = nv;
        best = v;
      }
    }
    kernel.push_back(best / best_norm);
  }

  SkewBlockForm out;
  out.blocks.resize(n);
  out.orthogonal.resize(dim, dim);
  Eigen::Index block = 0;
  auto place = [&](RealVector e1, RealVector e2, double value) {
    // Rotating within the pair keeps the block form; pin e1 positive and e2
    // zero at the first dominant coordinate.
    const RealVector weight = e1.cwiseAbs2() + e2.cwiseAbs2();
    Eigen::Index k = 0;
    const double top = weight.maxCoeff();
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (weight(i) >= top * (1.0 - 1e-9)) {
        k = i;
        break;
      }
    }
    const double rho = std::sqrt(weight(k));
    const double c = e1(k) / rho;
    const double s = e2(k) / rho;
    const RealVector r1 = c * e1 + s * e2;
    const RealVector r2 = -s * e1 + c * e2;
    out.orthogonal.col(2 * block) = r1;
    out.orthogonal.col(2 * block + 1) = r2;
    out.blocks(block) = value;
    ++block;
  };
  for (std::size_t i = 0; i + 1 < kernel.size(); i += 2) place(kernel[i], kernel[i + 1], 0.0);
  for (std::size_t i = 0; i < positive.size(); ++i) place(positive[i].first, positive[i].second, positive_m[i]);
  return out;
}

ComplexMatrix expm_taylor(const ComplexMatrix& x) {
  const Eigen::Index n = x.rows();
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = x / std::ldexp(1.0, squarings);

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k < 200; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (max_abs(term) < 1e-16 * max_abs(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace gusq
