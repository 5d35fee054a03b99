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

#include "gusq/ppm.hpp"

#include <cmath>
#include <locale>
#include <sstream>

#include "gusq/error.hpp"
#include "gusq/overlaps.hpp"

namespace gusq {
namespace {

double sinh2(double r) {
  const double s = std::sinh(r);
  return s * s;
}

void require_order(int order) {
  if (order < 2) throw Error(ErrorCode::kNumeric, "PPM needs K >= 2");
}

}  // namespace

PpmConfig PpmConfig::from_photon_budget(int order, double ns, double r, double theta) {
  require_order(order);
  if (r < 0.0) throw Error(ErrorCode::kNumeric, "squeeze magnitude must be nonnegative");
  if (ns < sinh2(r)) {
    std::ostringstream msg;
    msg << "photon budget " << ns << " is below the squeezing cost sinh^2 r = " << sinh2(r);
    throw Error(ErrorCode::kNumeric, msg.str());
  }
  return PpmConfig{order, r, theta, std::sqrt(ns - sinh2(r))};
}

Constellation ppm_constellation(const PpmConfig& cfg) {
  require_order(cfg.order);
  if (cfg.r < 0.0 || cfg.alpha < 0.0) throw Error(ErrorCode::kNumeric, "PPM needs r >= 0 and alpha >= 0");
  const SingleModeParams signal{cfg.r, cfg.theta, cplx(cfg.alpha, 0.0)};
  std::vector<std::vector<SingleModeParams>> symbols;
  for (int i = 0; i < cfg.order; ++i) {
    std::vector<SingleModeParams> word(static_cast<std::size_t>(cfg.order), SingleModeParams::vacuum());
    word[static_cast<std::size_t>(i)] = signal;
    symbols.push_back(std::move(word));
  }
  return Constellation::from_params(std::move(symbols));
}

SymmetryDescriptor ppm_mode_symmetry(int order) {
  return SymmetryDescriptor::from_symplectic(mode_shift_symplectic(order), order);
}

GramMatrix ppm_gram(int order, double gamma) { return GramMatrix::constant_offdiagonal(order, cplx(gamma, 0.0)); }

double ppm_error_probability(int order, double gamma) {
  require_order(order);
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorCode::kNumeric, "Gamma must lie in [0, 1]");
  const double k = order;
  const double s = std::sqrt(1.0 + (k - 1.0) * gamma) + (k - 1.0) * std::sqrt(1.0 - gamma);
  return 1.0 - s * s / (k * k);
}

double gamma_from_photon_budget(double ns, double r, double theta) {
  if (r < 0.0) throw Error(ErrorCode::kNumeric, "squeeze magnitude must be nonnegative");
  const double cost = sinh2(r);
  if (ns < cost) {
    std::ostringstream msg;
    msg << "photon budget " << ns << " is below the squeezing cost sinh^2 r = " << cost;
    throw Error(ErrorCode::kNumeric, msg.str());
  }
  return std::exp(-(ns - cost) * overlap_exponent(r, theta)) / std::cosh(r);
}

double min_feasible_nr(int order, double r) {
  require_order(order);
  return sinh2(r) / std::log2(static_cast<double>(order));
}

std::vector<SweepRow> pe_sweep(int order, double r, double theta, double nr_min, double nr_max, int points,
                               SweepSpacing spacing) {
  require_order(order);
  if (points < 1 || !(nr_min <= nr_max) || !std::isfinite(nr_max) || nr_min < 0.0 ||
      (spacing == SweepSpacing::kLog && nr_min <= 0.0) || (points > 1 && nr_min == nr_max))
    throw Error(ErrorCode::kEmptyRange, "invalid N_R range");

  const double bits = std::log2(static_cast<double>(order));
  const double cost = sinh2(r);
  std::vector<SweepRow> rows;
  bool any = false;
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    double nr = spacing == SweepSpacing::kLog ? nr_min * std::pow(nr_max / nr_min, t) : nr_min + t * (nr_max - nr_min);
    if (i == points - 1) nr = nr_max;
    SweepRow row{nr, std::nullopt, std::nullopt};
    const double ns = nr * bits;
    if (ns >= cost) {
      row.gamma = gamma_from_photon_budget(ns, r, theta);
      row.pe = ppm_error_probability(order, *row.gamma);
      any = true;
    }
    rows.push_back(row);
  }
  if (!any) {
    std::ostringstream msg;
    msg << "no feasible point: N_R must be at least sinh^2 r / log2 K = " << cost / bits;
    throw Error(ErrorCode::kEmptyRange, msg.str());
  }
  return rows;
}

std::string format_scientific(double value) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::scientific;
  os.precision(11);
  os << value;
  return os.str();
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n_r,gamma,pe,feasible\n";
  for (const SweepRow& row : rows) {
    out << format_scientific(row.n_r) << ',';
    if (row.gamma) out << format_scientific(*row.gamma);
    out << ',';
    if (row.pe) out << format_scientific(*row.pe);
    out << ',' << (row.feasible() ? "true" : "false") << '\n';
  }
}

}  // namespace gusq
