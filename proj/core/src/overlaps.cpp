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

#include "gusq/overlaps.hpp"

#include <cmath>

#include "gusq/error.hpp"

namespace gusq {

SingleModeParams SingleModeParams::from_z(cplx z, cplx alpha) {
  return SingleModeParams{std::abs(z), std::abs(z) == 0.0 ? 0.0 : std::arg(z), alpha};
}

bool operator==(const SingleModeParams& a, const SingleModeParams& b) {
  return a.r == b.r && a.theta == b.theta && a.alpha == b.alpha;
}

cplx yuen_inner_product(const SingleModeParams& bra, const SingleModeParams& ket) {
  if (bra.r < 0.0 || ket.r < 0.0) throw Error(ErrorCode::kNumeric, "squeeze magnitude must be nonnegative");
  const double mu1 = std::cosh(bra.r);
  const double mu0 = std::cosh(ket.r);
  const cplx nu1 = -std::polar(std::sinh(bra.r), bra.theta);
  const cplx nu0 = -std::polar(std::sinh(ket.r), ket.theta);
  const cplx beta1 = mu1 * bra.alpha + nu1 * std::conj(bra.alpha);
  const cplx beta0 = mu0 * ket.alpha + nu0 * std::conj(ket.alpha);
  const cplx a = mu0 * mu1 - nu0 * std::conj(nu1);
  const cplx b = nu0 * mu1 - mu0 * nu1;
  if (std::abs(a) < 1e-14) throw Error(ErrorCode::kNumeric, "degenerate overlap: |A| below 1e-14");

  const cplx num = a * (std::norm(beta1) + std::norm(beta0)) - 2.0 * std::conj(beta1) * beta0 +
                   b * std::conj(beta1) * std::conj(beta1) - std::conj(b) * beta0 * beta0;
  return std::pow(a, -0.5) * std::exp(-num / (2.0 * a));
}

double overlap_exponent(double r, double theta) { return 1.0 - std::tanh(r) * std::cos(theta); }

double gamma_vacuum_overlap(double r, double theta, double alpha) {
  if (r < 0.0) throw Error(ErrorCode::kNumeric, "squeeze magnitude must be nonnegative");
  return std::exp(-alpha * alpha * overlap_exponent(r, theta)) / std::cosh(r);
}

double symbol_photon_number(double r, cplx alpha) {
  const double s = std::sinh(r);
  return std::norm(alpha) + s * s;
}

cplx multimode_gram_entry(std::span<const SingleModeParams> bra, std::span<const SingleModeParams> ket) {
  if (bra.size() != ket.size()) throw Error(ErrorCode::kNumeric, "multimode overlap needs equal mode counts");
  cplx product(1.0, 0.0);
  for (std::size_t i = 0; i < bra.size(); ++i) {
    if (bra[i] == ket[i]) continue;
    product *= yuen_inner_product(bra[i], ket[i]);
  }
  return product;
}

}  // namespace gusq
