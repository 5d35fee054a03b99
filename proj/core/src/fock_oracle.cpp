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

#include <cmath>
#include <sstream>

#include <Eigen/SparseCore>

#include "gusq/error.hpp"

namespace gusq {
namespace {

using SparseC = Eigen::SparseMatrix<cplx>;

void require_dim(int dim) {
  if (dim < 2) throw Error(ErrorCode::kNumeric, "Fock truncation must be at least 2");
  if (dim > kMaxFockDim) {
    std::ostringstream msg;
    msg << "Fock truncation " << dim << " exceeds the cap " << kMaxFockDim;
    throw Error(ErrorCode::kSizeLimit, msg.str());
  }
}

double tail_of(const ComplexVector& v) {
  const Eigen::Index levels = std::min<Eigen::Index>(kTailLevels, v.size());
  return v.tail(levels).squaredNorm();
}

// Generators α a† − α* a and ½(z a†² − z* a²) as sparse matrices.
SparseC displacement_generator(cplx alpha, int dim) {
  std::vector<Eigen::Triplet<cplx>> t;
  for (int n = 1; n < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    t.emplace_back(n, n - 1, alpha * s);
    t.emplace_back(n - 1, n, -std::conj(alpha) * s);
  }
  SparseC x(dim, dim);
  x.setFromTriplets(t.begin(), t.end());
  return x;
}

SparseC squeeze_generator(cplx z, int dim) {
  std::vector<Eigen::Triplet<cplx>> t;
  for (int n = 2; n < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n) * static_cast<double>(n - 1));
    t.emplace_back(n, n - 2, 0.5 * z * s);
    t.emplace_back(n - 2, n, -0.5 * std::conj(z) * s);
  }
  SparseC x(dim, dim);
  x.setFromTriplets(t.begin(), t.end());
  return x;
}

// exp(X) v by substepped Taylor series; the dense expm_taylor is the same
// series, this variant keeps large truncations cheap.
ComplexVector expm_action(const SparseC& x, ComplexVector v) {
  double norm = 0.0;
  for (int k = 0; k < x.outerSize(); ++k) {
    double col = 0.0;
    for (SparseC::InnerIterator it(x, k); it; ++it) col += std::abs(it.value());
    norm = std::max(norm, col);
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const SparseC step = x / static_cast<double>(steps);
  for (int s = 0; s < steps; ++s) {
    ComplexVector term = v;
    ComplexVector sum = v;
    for (int k = 1; k < 100; ++k) {
      term = (step * term) / static_cast<double>(k);
      sum += term;
      if (term.cwiseAbs().maxCoeff() < 1e-17 * sum.cwiseAbs().maxCoeff()) break;
    }
    v = std::move(sum);
  }
  return v;
}

[[noreturn]] void throw_tail(const char* what, double tail, int dim, std::optional<int> suggestion) {
  std::ostringstream msg;
  msg << what << ": truncation D=" << dim << " leaves tail weight " << tail << " on the top " << kTailLevels
      << " levels";
  if (suggestion) msg << "; use D >= " << *suggestion;
  throw TruncationError(msg.str(), suggestion);
}

std::optional<int> suggest_dimension(const SingleModeParams& p, double max_tail, int from) {
  try {
    return required_dimension(p, max_tail, from);
  } catch (const TruncationError&) {
    return std::nullopt;
  }
}

ComplexVector state_vector(const SingleModeParams& p, int dim) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(0) = 1.0;
  if (p.r != 0.0) v = expm_action(squeeze_generator(p.z(), dim), std::move(v));
  if (p.alpha != cplx(0.0, 0.0)) v = expm_action(displacement_generator(p.alpha, dim), std::move(v));
  return v;
}

}  // namespace

FockVector FockVector::vacuum(int dim) { return number(0, dim); }

FockVector FockVector::number(int n, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim) throw Error(ErrorCode::kNumeric, "number state outside the truncation");
  FockVector v{ComplexVector::Zero(dim)};
  v.amplitudes(n) = 1.0;
  return v;
}

double FockVector::tail_mass() const { return tail_of(amplitudes); }

FockVector FockOperator::apply(const FockVector& v) const {
  if (v.dim() != dim()) throw Error(ErrorCode::kNumeric, "Fock operator and vector dimensions differ");
  return FockVector{matrix * v.amplitudes};
}

double FockOperator::unitarity_defect() const {
  return max_abs(ComplexMatrix(matrix.adjoint() * matrix - ComplexMatrix::Identity(dim(), dim())));
}

LadderOperators ladder_operators(int dim) {
  require_dim(dim);
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return LadderOperators{FockOperator{a, 0.0}, FockOperator{a.adjoint(), 0.0}};
}

FockOperator number_operator(int dim) {
  require_dim(dim);
  ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return FockOperator{n, 0.0};
}

FockOperator fock_displacement(cplx alpha, int dim, double max_tail) {
  require_dim(dim);
  const ComplexMatrix gen(displacement_generator(alpha, dim));
  FockOperator op{expm_taylor(gen), 0.0};
  op.tail_mass = tail_of(op.matrix.col(0));
  if (op.tail_mass > max_tail)
    throw_tail("displacement", op.tail_mass, dim, suggest_dimension({0.0, 0.0, alpha}, max_tail, dim));
  return op;
}

FockOperator fock_squeeze(cplx z, int dim, double max_tail) {
  require_dim(dim);
  const ComplexMatrix gen(squeeze_generator(z, dim));
  FockOperator op{expm_taylor(gen), 0.0};
  op.tail_mass = tail_of(op.matrix.col(0));
  if (op.tail_mass > max_tail)
    throw_tail("squeeze", op.tail_mass, dim, suggest_dimension(SingleModeParams::from_z(z, 0.0), max_tail, dim));
  return op;
}

FockOperator fock_rotation(double phi, int dim) {
  require_dim(dim);
  ComplexMatrix r = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) r(n, n) = std::polar(1.0, n * phi);
  return FockOperator{r, 0.0};
}

FockVector fock_state(const SingleModeParams& p, int dim, double max_tail) {
  require_dim(dim);
  FockVector v{state_vector(p, dim)};
  const double tail = v.tail_mass();
  if (tail > max_tail) throw_tail("state", tail, dim, suggest_dimension(p, max_tail, dim));
  return v;
}

double fock_photon_number(const FockVector& v) {
  double num = 0.0;
  for (int n = 0; n < v.dim(); ++n) num += n * std::norm(v.amplitudes(n));
  return num / v.amplitudes.squaredNorm();
}

int required_dimension(const SingleModeParams& p, double max_tail, int start) {
  int dim = std::max(start, 2);
  while (dim <= kMaxFockDim) {
    if (tail_of(state_vector(p, dim)) <= max_tail) return dim;
    dim += dim < 200 ? kConvergenceStep : dim / 4;
  }
  std::ostringstream msg;
  msg << "no Fock truncation up to " << kMaxFockDim << " meets tail weight " << max_tail;
  throw TruncationError(msg.str(), std::nullopt);
}

OracleOverlap oracle_overlap(const SingleModeParams& bra, const SingleModeParams& ket, int dim) {
  const FockVector b = fock_state(bra, dim);
  const FockVector k = fock_state(ket, dim);
  const cplx value = b.amplitudes.dot(k.amplitudes);

  const int wider = dim + kConvergenceStep;
  const cplx check = state_vector(bra, wider).dot(state_vector(ket, wider));
  const double err = std::abs(value - check);
  if (err > kOverlapConvergenceTol) {
    std::ostringstream msg;
    msg << "oracle overlap not converged at D=" << dim << " (changes by " << err << " at D=" << wider << ")";
    throw TruncationError(msg.str(), std::nullopt);
  }
  return OracleOverlap{value, err, dim};
}

FockVector kron_state(std::span<const FockVector> modes) {
  if (modes.empty()) throw Error(ErrorCode::kNumeric, "kron_state needs at least one mode");
  std::size_t total = 1;
  for (const FockVector& m : modes) {
    total *= static_cast<std::size_t>(m.dim());
    if (total > kMaxKronDim) throw Error(ErrorCode::kSizeLimit, "tensor-product dimension exceeds 1e5");
  }
  ComplexVector out = modes.back().amplitudes;
  for (std::size_t i = modes.size() - 1; i-- > 0;) {
    const ComplexVector& low = modes[i].amplitudes;
    ComplexVector next(out.size() * low.size());
    for (Eigen::Index hi = 0; hi < out.size(); ++hi) next.segment(hi * low.size(), low.size()) = out(hi) * low;
    out = std::move(next);
  }
  return FockVector{std::move(out)};
}

}  // namespace gusq
