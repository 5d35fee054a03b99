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

#include "gusq/phase_space.hpp"

#include <cmath>
#include <sstream>

#include "gusq/error.hpp"

namespace gusq {
namespace {

constexpr double kSymplecticTol = 1e-9;
constexpr double kChannelPhysicalityTol = 1e-6;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kNumeric, what);
}

void require_positive_definite(const RealMatrix& cov) {
  const SymmetricEigen eig = symmetric_eigendecomposition(cov);
  if (eig.values(0) <= 0.0) {
    std::ostringstream msg;
    msg << "covariance matrix is not positive definite (smallest eigenvalue " << eig.values(0) << ")";
    throw Error(ErrorCode::kNumeric, msg.str());
  }
}

RealMatrix symmetrized(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

RealMatrix symplectic_form(int modes) {
  require(modes >= 1, "symplectic form needs at least one mode");
  RealMatrix omega = RealMatrix::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

RealVector symplectic_eigenvalues(const RealMatrix& cov) {
  require(cov.rows() == cov.cols() && cov.rows() % 2 == 0 && cov.rows() > 0,
          "covariance must be square with even dimension");
  require_positive_definite(cov);
  const RealMatrix root = matrix_function_symmetric(cov, [](double x) { return std::sqrt(x); });
  const RealMatrix omega = symplectic_form(static_cast<int>(cov.rows() / 2));
  const RealMatrix m = root * omega * root;
  return skew_block_diagonalize(0.5 * (m - m.transpose())).blocks;
}

GaussianState::GaussianState(RealVector mean, RealMatrix cov, PhysicalityCheck check)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  require(mean_.size() > 0 && mean_.size() % 2 == 0, "mean vector must have even, nonzero length 2N");
  require(cov_.rows() == mean_.size() && cov_.cols() == mean_.size(), "covariance must be 2N x 2N");
  require(mean_.allFinite() && cov_.allFinite(), "state entries must be finite");
  const double asym = max_abs(RealMatrix(cov_ - cov_.transpose()));
  if (asym > kStructureTol) {
    std::ostringstream msg;
    msg << "covariance matrix is not symmetric (max asymmetry " << asym << ")";
    throw Error(ErrorCode::kNumeric, msg.str());
  }
  cov_ = symmetrized(cov_);
  if (check == PhysicalityCheck::kEnforce) {
    const RealVector nu = symplectic_eigenvalues(cov_);
    if (nu(0) < 1.0 - kPhysicalityTol) {
      std::ostringstream msg;
      msg << "unphysical covariance: smallest symplectic eigenvalue " << nu(0) << " < 1";
      throw Error(ErrorCode::kNumeric, msg.str());
    }
  } else {
    require_positive_definite(cov_);
  }
}

GaussianState GaussianState::vacuum(int modes) {
  require(modes >= 1, "vacuum needs at least one mode");
  return GaussianState(RealVector::Zero(2 * modes), RealMatrix::Identity(2 * modes, 2 * modes),
                       PhysicalityCheck::kSkip);
}

SymplecticMap::SymplecticMap(RealMatrix s, RealVector d) : s_(std::move(s)), d_(std::move(d)) {
  require(d_.size() > 0 && d_.size() % 2 == 0, "displacement must have even, nonzero length 2N");
  require(s_.rows() == d_.size() && s_.cols() == d_.size(), "symplectic matrix must be 2N x 2N");
  const double scale = std::max(1.0, max_abs(s_) * max_abs(s_));
  const double defect = symplectic_defect();
  if (defect > kSymplecticTol * scale) {
    std::ostringstream msg;
    msg << "matrix is not symplectic: max |S Omega S^T - Omega| = " << defect;
    throw Error(ErrorCode::kNumeric, msg.str());
  }
}

SymplecticMap SymplecticMap::identity(int modes) {
  return SymplecticMap(RealMatrix::Identity(2 * modes, 2 * modes), RealVector::Zero(2 * modes));
}

double SymplecticMap::symplectic_defect() const {
  const RealMatrix omega = symplectic_form(modes());
  return max_abs(RealMatrix(s_ * omega * s_.transpose() - omega));
}

GaussianChannel::GaussianChannel(RealMatrix e, RealVector shift, RealMatrix f)
    : e_(std::move(e)), shift_(std::move(shift)), f_(std::move(f)) {
  const Eigen::Index dim = shift_.size();
  require(dim > 0 && dim % 2 == 0, "channel shift must have even, nonzero length 2N");
  require(e_.rows() == dim && e_.cols() == dim && f_.rows() == dim && f_.cols() == dim,
          "channel matrices must be 2N x 2N");
  if (max_abs(RealMatrix(f_ - f_.transpose())) > kStructureTol)
    throw Error(ErrorCode::kNumeric, "channel noise matrix F is not symmetric");
  f_ = symmetrized(f_);
  const double low = symmetric_eigendecomposition(f_).values(0);
  if (low < -kStructureTol) {
    std::ostringstream msg;
    msg << "channel noise matrix F is not positive semidefinite (eigenvalue " << low << ")";
    throw Error(ErrorCode::kNumeric, msg.str());
  }
}

GaussianChannel GaussianChannel::lossy(int modes, double eta) {
  require(eta >= 0.0 && eta <= 1.0, "lossy channel transmissivity must lie in [0, 1]");
  const RealMatrix id = RealMatrix::Identity(2 * modes, 2 * modes);
  return GaussianChannel(std::sqrt(eta) * id, RealVector::Zero(2 * modes), (1.0 - eta) * id);
}

GaussianChannel GaussianChannel::thermal(int modes, double eta, double thermal_variance) {
  require(eta >= 0.0 && eta <= 1.0, "thermal channel transmissivity must lie in [0, 1]");
  require(thermal_variance >= 1.0, "thermal channel variance must be at least 1");
  const RealMatrix id = RealMatrix::Identity(2 * modes, 2 * modes);
  return GaussianChannel(std::sqrt(eta) * id, RealVector::Zero(2 * modes), (1.0 - eta) * thermal_variance * id);
}

GaussianChannel GaussianChannel::amplifier(int modes, double gain) {
  require(gain >= 1.0, "amplifier gain must be at least 1");
  const RealMatrix id = RealMatrix::Identity(2 * modes, 2 * modes);
  return GaussianChannel(std::sqrt(gain) * id, RealVector::Zero(2 * modes), (gain - 1.0) * id);
}

GaussianChannel GaussianChannel::classical_noise(int modes, double noise) {
  require(noise >= 0.0, "classical noise must be nonnegative");
  const RealMatrix id = RealMatrix::Identity(2 * modes, 2 * modes);
  return GaussianChannel(id, RealVector::Zero(2 * modes), noise * id);
}

cplx characteristic_function(const GaussianState& state, std::span<const double> point) {
  require(static_cast<Eigen::Index>(point.size()) == state.mean().size(), "point dimension must be 2N");
  const Eigen::Map<const RealVector> w(point.data(), static_cast<Eigen::Index>(point.size()));
  require(w.allFinite(), "point must be finite");
  const RealMatrix omega = symplectic_form(state.modes());
  const double quad = w.dot(omega * state.cov() * omega.transpose() * w);
  const double lin = (omega * state.mean()).dot(w);
  return std::exp(cplx(-0.5 * quad, -lin));
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticMap& map) {
  require(state.modes() == map.modes(), "state and symplectic map have different mode counts");
  return GaussianState(map.s() * state.mean() + map.d(), map.s() * state.cov() * map.s().transpose(),
                       PhysicalityCheck::kSkip);
}

GaussianState apply_channel(const GaussianState& state, const GaussianChannel& channel) {
  require(state.modes() == channel.modes(), "state and channel have different mode counts");
  const RealMatrix& e = channel.e();
  GaussianState out(e.transpose() * state.mean() + channel.shift(), e.transpose() * state.cov() * e + channel.f(),
                    PhysicalityCheck::kSkip);
  const double low = symplectic_eigenvalues(out.cov())(0);
  if (low < 1.0 - kChannelPhysicalityTol) {
    std::ostringstream msg;
    msg << "unphysical channel/state pair: output symplectic eigenvalue " << low << " < 1";
    throw Error(ErrorCode::kNumeric, msg.str());
  }
  return out;
}

WilliamsonForm williamson(const RealMatrix& cov) {
  require(cov.rows() == cov.cols() && cov.rows() % 2 == 0 && cov.rows() > 0,
          "covariance must be square with even dimension");
  if (max_abs(RealMatrix(cov - cov.transpose())) > kStructureTol)
    throw Error(ErrorCode::kNumeric, "Williamson decomposition needs a symmetric matrix");
  const RealMatrix v = symmetrized(cov);
  require_positive_definite(v);

  const int modes = static_cast<int>(v.rows() / 2);
  const RealMatrix root = matrix_function_symmetric(v, [](double x) { return std::sqrt(x); });
  const RealMatrix omega = symplectic_form(modes);
  const RealMatrix m = root * omega * root;
  const SkewBlockForm form = skew_block_diagonalize(0.5 * (m - m.transpose()));

  RealVector inv_sqrt(2 * modes);
  for (int i = 0; i < modes; ++i) {
    inv_sqrt(2 * i) = inv_sqrt(2 * i + 1) = 1.0 / std::sqrt(form.blocks(i));
  }
  RealMatrix s = root * form.orthogonal * inv_sqrt.asDiagonal();
  return WilliamsonForm{form.blocks, SymplecticMap(std::move(s), RealVector::Zero(2 * modes))};
}

GaussianState thermal_state(std::span<const double> nu) {
  require(!nu.empty(), "thermal state needs at least one mode");
  const Eigen::Index modes = static_cast<Eigen::Index>(nu.size());
  RealVector diag(2 * modes);
  for (Eigen::Index i = 0; i < modes; ++i) {
    const double value = nu[static_cast<std::size_t>(i)];
    if (!(value >= 1.0)) {
      std::ostringstream msg;
      msg << "unphysical thermal variance " << value << " < 1 for mode " << i;
      throw Error(ErrorCode::kNumeric, msg.str());
    }
    diag(2 * i) = diag(2 * i + 1) = value;
  }
  return GaussianState(RealVector::Zero(2 * modes), diag.asDiagonal(), PhysicalityCheck::kSkip);
}

double thermal_photons(double nu) { return 0.5 * (nu - 1.0); }

double mean_photon_number(const GaussianState& state) {
  return (state.cov().trace() - 2.0 * state.modes()) / 4.0 + state.mean().squaredNorm() / 4.0;
}

double state_overlap(const GaussianState& a, const GaussianState& b) {
  require(a.modes() == b.modes(), "states have different mode counts");
  const RealMatrix sum = a.cov() + b.cov();
  const RealVector delta = a.mean() - b.mean();
  const Eigen::LDLT<RealMatrix> ldlt(sum);
  const double det = sum.determinant();
  return std::pow(2.0, a.modes()) / std::sqrt(det) * std::exp(-0.5 * delta.dot(ldlt.solve(delta)));
}

}  // namespace gusq
