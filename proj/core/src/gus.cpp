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

#include "gusq/gus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "gusq/error.hpp"

namespace gusq {
namespace {

constexpr double kPriorTol = 1e-12;
constexpr double kHilbertOrderTol = 1e-10;
constexpr double kPhaseSpaceOrderTol = 1e-9;
constexpr double kPhaseCheckTol = 1e-8;
constexpr Eigen::Index kFullPhaseCheckDim = 256;
constexpr Eigen::Index kSampledPhaseColumns = 32;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kNumeric, what);
}

std::vector<double> normalized_priors(std::vector<double> priors, std::size_t k) {
  if (priors.empty()) return std::vector<double>(k, 1.0 / static_cast<double>(k));
  require(priors.size() == k, "one prior per state is required");
  for (double q : priors) require(q >= 0.0, "priors must be nonnegative");
  const double total = std::accumulate(priors.begin(), priors.end(), 0.0);
  require(std::abs(total - 1.0) <= kPriorTol, "priors must sum to 1");
  return priors;
}

GaussianState state_from_params(const std::vector<SingleModeParams>& modes) {
  const int n = static_cast<int>(modes.size());
  ComplexMatrix z = ComplexMatrix::Zero(n, n);
  ComplexVector alpha(n);
  for (int i = 0; i < n; ++i) {
    const SingleModeParams& p = modes[static_cast<std::size_t>(i)];
    require(p.r >= 0.0, "squeeze magnitude must be nonnegative");
    z(i, i) = p.z();
    alpha(i) = p.alpha;
  }
  return generate_pure_state(SqueezeParams(z), DisplacementParams(alpha));
}

void require_dense_size(std::int64_t dim) {
  if (dim > kMaxDenseDim) {
    std::ostringstream msg;
    msg << "dense projector/phase matrices are limited to dimension " << kMaxDenseDim << " (got " << dim << ")";
    throw Error(ErrorCode::kSizeLimit, msg.str());
  }
}

cplx unit_root(int m, int order) {
  const int r = ((m % order) + order) % order;
  // Quarter turns are exact so that real and imaginary zeros stay zero.
  if ((4 * r) % order == 0) {
    static constexpr cplx kQuarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return kQuarter[4 * r / order];
  }
  return std::polar(1.0, 2.0 * kPi * r / order);
}

// exp(iH) e_c by scaling and a Taylor series on the vector; `norm` bounds ‖H‖₂.
ComplexVector exp_i_column(const ComplexMatrix& h, Eigen::Index c, double norm) {
  const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * norm)));
  const ComplexMatrix step = (cplx(0.0, 1.0) / static_cast<double>(steps)) * h;
  ComplexVector v = ComplexVector::Unit(h.rows(), c);
  for (int s = 0; s < steps; ++s) {
    ComplexVector term = v;
    ComplexVector sum = v;
    for (int j = 1; j < 60 && term.norm() > 1e-17 * sum.norm(); ++j) {
      term = step * term / static_cast<double>(j);
      sum += term;
    }
    v = sum;
  }
  return v;
}

PhaseMatrix phase_from_projectors(const std::vector<ComplexMatrix>& projectors, const ComplexMatrix& q) {
  const int order = static_cast<int>(projectors.size());
  const Eigen::Index n = q.rows();
  ComplexMatrix phi = ComplexMatrix::Zero(n, n);
  for (int m = 1; m < order; ++m) phi += (2.0 * kPi * m / order) * projectors[static_cast<std::size_t>(m)];
  phi = 0.5 * (phi + phi.adjoint()).eval();

  std::vector<Eigen::Index> columns;
  if (n <= kFullPhaseCheckDim) {
    for (Eigen::Index c = 0; c < n; ++c) columns.push_back(c);
  } else {
    for (Eigen::Index i = 0; i < kSampledPhaseColumns; ++i) columns.push_back(i * (n - 1) / (kSampledPhaseColumns - 1));
  }
  const double spectral_bound = 2.0 * kPi * (order - 1) / order;  // eigenvalues of φ are 2πm/K
  double residual = 0.0;
  for (Eigen::Index c : columns)
    residual = std::max(residual, max_abs(ComplexMatrix(exp_i_column(phi, c, spectral_bound) - q.col(c))));
  if (residual > kPhaseCheckTol) {
    std::ostringstream msg;
    msg << "phase matrix fails exp(i phi) = Q (residual " << residual << ")";
    throw Error(ErrorCode::kNumeric, msg.str());
  }
  return PhaseMatrix{std::move(phi), residual};
}

ComplexMatrix matrix_power(const ComplexMatrix& q, int k) {
  ComplexMatrix out = ComplexMatrix::Identity(q.rows(), q.cols());
  for (int i = 0; i < k; ++i) out = out * q;
  return out;
}

}  // namespace

Constellation::Constellation(std::vector<GaussianState> states, std::vector<double> priors)
    : states_(std::move(states)) {
  require(!states_.empty(), "constellation needs at least one state");
  for (const GaussianState& s : states_) require(s.modes() == states_.front().modes(), "states differ in mode count");
  priors_ = normalized_priors(std::move(priors), states_.size());
}

Constellation Constellation::from_params(std::vector<std::vector<SingleModeParams>> params, std::vector<double> priors) {
  require(!params.empty(), "constellation needs at least one symbol");
  std::vector<GaussianState> states;
  states.reserve(params.size());
  for (const auto& symbol : params) {
    require(!symbol.empty() && symbol.size() == params.front().size(), "symbols differ in mode count");
    states.push_back(state_from_params(symbol));
  }
  Constellation c(std::move(states), std::move(priors));
  c.params_ = std::move(params);
  return c;
}

const std::vector<std::vector<SingleModeParams>>& Constellation::params() const {
  if (!params_) throw Error(ErrorCode::kNumeric, "constellation carries no per-mode parameters");
  return *params_;
}

const std::vector<ComplexVector>& Constellation::vectors() const {
  if (!vectors_) throw Error(ErrorCode::kNumeric, "constellation carries no Hilbert-space vectors");
  return *vectors_;
}

Constellation Constellation::with_vectors(std::vector<ComplexVector> vectors) const {
  require(vectors.size() == states_.size(), "one vector per state is required");
  for (auto& v : vectors) {
    require(v.size() == vectors.front().size(), "vectors differ in dimension");
    const double n = v.norm();
    require(n > 0.0, "zero vector in constellation");
    v /= n;
  }
  Constellation out = *this;
  out.vectors_ = std::move(vectors);
  return out;
}

SymmetryDescriptor SymmetryDescriptor::from_symplectic(SymplecticMap s, int order) {
  require(order >= 1, "symmetry order must be positive");
  return SymmetryDescriptor{SymmetryKind::kPhaseSpace, order, std::move(s), std::nullopt};
}

SymmetryDescriptor SymmetryDescriptor::from_unitary(ComplexMatrix q, int order) {
  require(order >= 1, "symmetry order must be positive");
  require(q.rows() == q.cols(), "symmetry operator must be square");
  return SymmetryDescriptor{SymmetryKind::kHilbert, order, std::nullopt, std::move(q)};
}

std::pair<SqueezeParams, DisplacementParams> rotate_params(const SqueezeParams& z, const DisplacementParams& alpha,
                                                           const RotationParams& phi) {
  require(z.modes() == phi.modes() && alpha.modes() == phi.modes(), "parameter mode counts differ");
  const ComplexMatrix u = rotation_unitary(phi);
  return {SqueezeParams(u * z.z * u.transpose()), DisplacementParams(u * alpha.alpha)};
}

SingleModeParams rotate_params(const SingleModeParams& p, double phi) {
  return SingleModeParams{p.r, p.theta + 2.0 * phi, std::polar(1.0, phi) * p.alpha};
}

PskConstellation build_psk(int order, cplx z, cplx alpha) {
  require(order >= 2, "PSK needs K >= 2");
  const double step = 2.0 * kPi / order;
  const SingleModeParams ref = SingleModeParams::from_z(z, alpha);
  std::vector<std::vector<SingleModeParams>> params;
  for (int i = 0; i < order; ++i) params.push_back({rotate_params(ref, i * step)});
  return PskConstellation{Constellation::from_params(std::move(params)),
                          SymmetryDescriptor::from_symplectic(rotation_map(RotationParams::single(step)), order)};
}

Permutation::Permutation(std::vector<std::int64_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::int64_t v : image_) {
    require(v >= 0 && static_cast<std::size_t>(v) < image_.size() && !seen[static_cast<std::size_t>(v)],
            "index map is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::int64_t> image(n);
  std::iota(image.begin(), image.end(), std::int64_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& other) const {
  require(size() == other.size(), "permutation sizes differ");
  std::vector<std::int64_t> image(size());
  for (std::size_t c = 0; c < size(); ++c) image[c] = image_[static_cast<std::size_t>(other.image_[c])];
  return Permutation(std::move(image));
}

Permutation Permutation::power(int k) const {
  require(k >= 0, "negative permutation power");
  Permutation out = identity(size());
  for (int i = 0; i < k; ++i) out = compose(out);
  return out;
}

bool Permutation::is_identity() const { return *this == identity(size()); }

ComplexMatrix Permutation::to_matrix() const {
  const auto n = static_cast<Eigen::Index>(size());
  ComplexMatrix q = ComplexMatrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) q(image_[static_cast<std::size_t>(c)], c) = 1.0;
  return q;
}

ComplexVector Permutation::apply(const ComplexVector& v) const {
  require(static_cast<std::size_t>(v.size()) == size(), "vector and permutation sizes differ");
  ComplexVector out(v.size());
  for (Eigen::Index c = 0; c < v.size(); ++c) out(image_[static_cast<std::size_t>(c)]) = v(c);
  return out;
}

Permutation ppm_symmetry_operator(int order, int levels) {
  require(order >= 1 && levels >= 1, "PPM symmetry needs K >= 1 and n >= 1");
  std::int64_t dim = 1;
  for (int k = 0; k < order; ++k) {
    dim *= levels;
    if (dim > kMaxPpmDim) {
      std::ostringstream msg;
      msg << "PPM symmetry dimension n^K exceeds " << kMaxPpmDim;
      throw Error(ErrorCode::kSizeLimit, msg.str());
    }
  }
  const std::int64_t top = dim / levels;  // n^{K−1}
  std::vector<std::int64_t> image(static_cast<std::size_t>(dim));
  for (std::int64_t c = 0; c < dim; ++c) {
    // digits x₀ … x_{K−1} (x₀ least significant) → x_{K−1}, x₀, …, x_{K−2}
    const std::int64_t last = c / top;
    const std::int64_t rest = c % top;
    image[static_cast<std::size_t>(c)] = rest * levels + last;
  }
  return Permutation(std::move(image));
}

std::vector<ComplexMatrix> ppm_projectors(const ComplexMatrix& q, int order) {
  require(order >= 1 && q.rows() == q.cols(), "projectors need a square Q and K >= 1");
  require_dense_size(q.rows());
  const Eigen::Index n = q.rows();
  std::vector<ComplexMatrix> powers;
  powers.reserve(static_cast<std::size_t>(order));
  powers.push_back(ComplexMatrix::Identity(n, n));
  for (int k = 1; k < order; ++k) powers.push_back(powers.back() * q);
  const double residual = max_abs(ComplexMatrix(powers.back() * q - ComplexMatrix::Identity(n, n)));
  if (residual > kHilbertOrderTol) {
    std::ostringstream msg;
    msg << "Q^K != I (max deviation " << residual << ")";
    throw Error(ErrorCode::kNumeric, msg.str());
  }

  std::vector<ComplexMatrix> projectors;
  for (int m = 0; m < order; ++m) {
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < order; ++k) p += unit_root(-m * k, order) * powers[static_cast<std::size_t>(k)];
    projectors.push_back(p / static_cast<double>(order));
  }
  return projectors;
}

std::vector<ComplexMatrix> ppm_projectors(const Permutation& q, int order) {
  require(order >= 1, "projectors need K >= 1");
  require_dense_size(static_cast<std::int64_t>(q.size()));
  require(q.power(order).is_identity(), "Q^K != I");
  const auto n = static_cast<Eigen::Index>(q.size());

  std::vector<ComplexMatrix> projectors(static_cast<std::size_t>(order), ComplexMatrix::Zero(n, n));
  Permutation power = Permutation::identity(q.size());
  for (int k = 0; k < order; ++k) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::int64_t row = power.image()[static_cast<std::size_t>(c)];
      for (int m = 0; m < order; ++m) projectors[static_cast<std::size_t>(m)](row, c) += unit_root(-m * k, order);
    }
    power = q.compose(power);
  }
  for (ComplexMatrix& p : projectors) p /= static_cast<double>(order);
  return projectors;
}

PhaseMatrix ppm_phase_matrix(const ComplexMatrix& q, int order) {
  return phase_from_projectors(ppm_projectors(q, order), q);
}

PhaseMatrix ppm_phase_matrix(const Permutation& q, int order) {
  return phase_from_projectors(ppm_projectors(q, order), q.to_matrix());
}

SymplecticMap mode_shift_symplectic(int modes) {
  require(modes >= 1, "mode shift needs at least one mode");
  RealMatrix s = RealMatrix::Zero(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) {
    const int to = (j + 1) % modes;
    s(2 * to, 2 * j) = 1.0;
    s(2 * to + 1, 2 * j + 1) = 1.0;
  }
  return SymplecticMap(std::move(s), RealVector::Zero(2 * modes));
}

RealMatrix phase_rotation_matrix(int modes, double phi) {
  RealMatrix s = RealMatrix::Zero(2 * modes, 2 * modes);
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  for (int j = 0; j < modes; ++j) {
    s(2 * j, 2 * j) = c;
    s(2 * j, 2 * j + 1) = -sn;
    s(2 * j + 1, 2 * j) = sn;
    s(2 * j + 1, 2 * j + 1) = c;
  }
  return s;
}

GusReport verify_gus(const Constellation& c, const SymmetryDescriptor& sym, double tol) {
  GusReport report;
  const int k = c.order();
  auto flag = [&](int index, std::string what, double deviation) {
    report.passed = false;
    report.violations.push_back(GusViolation{index, std::move(what), deviation});
  };
  if (sym.order != k) {
    flag(-1, "symmetry order differs from constellation size", static_cast<double>(std::abs(sym.order - k)));
  }

  if (sym.kind == SymmetryKind::kPhaseSpace) {
    require(sym.phase_space.has_value(), "phase-space symmetry descriptor without a symplectic map");
    const SymplecticMap& map = *sym.phase_space;
    require(map.modes() == c.modes(), "symmetry and constellation mode counts differ");

    RealMatrix s_pow = RealMatrix::Identity(map.s().rows(), map.s().cols());
    RealVector d_pow = RealVector::Zero(map.d().size());
    for (int i = 0; i < sym.order; ++i) {
      d_pow = map.s() * d_pow + map.d();
      s_pow = map.s() * s_pow;
    }
    report.order_residual =
        std::max(max_abs(RealMatrix(s_pow - RealMatrix::Identity(s_pow.rows(), s_pow.cols()))), max_abs(RealMatrix(d_pow)));
    if (report.order_residual > kPhaseSpaceOrderTol) flag(-1, "S_Q^K is not the identity map", report.order_residual);

    GaussianState current = c.states().front();
    for (int i = 1; i < k; ++i) {
      current = apply_symplectic(current, map);
      const GaussianState& target = c.states()[static_cast<std::size_t>(i)];
      const double dm = max_abs(RealMatrix(current.mean() - target.mean()));
      const double dv = max_abs(RealMatrix(current.cov() - target.cov()));
      report.max_deviation = std::max({report.max_deviation, dm, dv});
      if (dm > tol) flag(i, "mean differs from S_Q^i applied to state 0", dm);
      if (dv > tol) flag(i, "covariance differs from S_Q^i applied to state 0", dv);
    }
  } else {
    require(sym.hilbert.has_value(), "Hilbert symmetry descriptor without an operator");
    const ComplexMatrix& q = *sym.hilbert;
    const auto& vectors = c.vectors();
    require(vectors.front().size() == q.rows(), "symmetry operator and vector dimensions differ");

    const ComplexMatrix q_pow = matrix_power(q, sym.order);
    report.order_residual = max_abs(ComplexMatrix(q_pow - ComplexMatrix::Identity(q.rows(), q.cols())));
    if (report.order_residual > kHilbertOrderTol) flag(-1, "Q^K is not the identity", report.order_residual);

    ComplexVector current = vectors.front();
    for (int i = 1; i < k; ++i) {
      current = q * current;
      const double fidelity = std::abs(vectors[static_cast<std::size_t>(i)].dot(current));
      const double deviation = 1.0 - fidelity;
      report.max_deviation = std::max(report.max_deviation, deviation);
      if (deviation > tol) flag(i, "vector differs from Q^i applied to vector 0 beyond a global phase", deviation);
    }
  }
  return report;
}

std::vector<double> closure_grid(int order, int random_angles, std::uint64_t seed) {
  require(order >= 1 && random_angles >= 0, "closure grid needs K >= 1");
  std::vector<double> grid;
  for (int k = 0; k < order; ++k) grid.push_back(2.0 * kPi * k / order);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int i = 0; i < random_angles; ++i) grid.push_back(angle(rng));
  return grid;
}

ClosureReport channel_closure_check(const GaussianChannel& ch, const std::vector<double>& phi_grid, double tol) {
  ClosureReport report;
  const int n = ch.modes();
  const RealMatrix& e = ch.e();
  const RealMatrix& f = ch.f();

  for (double phi : phi_grid) {
    const RealMatrix sigma = phase_rotation_matrix(n, phi);
    report.max_commutator = std::max(report.max_commutator, max_abs(RealMatrix(e * sigma - sigma * e)));
  }
  const double f_mean = f.trace() / (2.0 * n);
  report.f_anisotropy = max_abs(RealMatrix(f - f_mean * RealMatrix::Identity(2 * n, 2 * n)));
  report.e_commutes = report.max_commutator < tol;
  report.f_isotropic = report.f_anisotropy < tol;

  // Sample pure inputs: a squeezed-displaced product and a correlated two-mode-ish state.
  std::vector<GaussianState> samples;
  samples.push_back(generate_pure_state(SqueezeParams(std::polar(0.4, 0.7) * ComplexMatrix::Identity(n, n)),
                                        DisplacementParams(ComplexVector::Constant(n, cplx(0.6, -0.3)))));
  ComplexMatrix z = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    z(i, i) = std::polar(0.25 + 0.1 * i, 1.3 * i);
    if (i + 1 < n) z(i, i + 1) = z(i + 1, i) = cplx(0.2, 0.1);
  }
  samples.push_back(generate_pure_state(SqueezeParams(z), DisplacementParams(ComplexVector::Constant(n, cplx(-0.4, 0.9)))));

  for (const GaussianState& s : samples) {
    for (double phi : phi_grid) {
      const RealMatrix sigma = phase_rotation_matrix(n, phi);
      const RealMatrix rotate_then_channel = e.transpose() * (sigma * s.cov() * sigma.transpose()) * e + f;
      const RealMatrix channel_then_rotate = sigma * (e.transpose() * s.cov() * e + f) * sigma.transpose();
      const RealVector mean_a = e.transpose() * (sigma * s.mean()) + ch.shift();
      const RealVector mean_b = sigma * (e.transpose() * s.mean() + ch.shift());
      report.max_sample_deviation =
          std::max({report.max_sample_deviation, max_abs(RealMatrix(rotate_then_channel - channel_then_rotate)),
                    max_abs(RealMatrix(mean_a - mean_b))});
    }
  }
  report.samples_commute = report.max_sample_deviation < tol;
  report.passed = report.e_commutes && report.f_isotropic && report.samples_commute;
  return report;
}

Constellation apply_channel(const Constellation& c, const GaussianChannel& ch) {
  std::vector<GaussianState> out;
  out.reserve(c.states().size());
  for (const GaussianState& s : c.states()) out.push_back(apply_channel(s, ch));
  return Constellation(std::move(out), c.priors());
}

}  // namespace gusq
