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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

#include "gusq/error.hpp"
#include "gusq/fock_oracle.hpp"
#include "gusq/gus.hpp"
#include "gusq/json_io.hpp"
#include "gusq/overlaps.hpp"
#include "gusq/phase_space.hpp"
#include "gusq/ppm.hpp"
#include "gusq/srm.hpp"
#include "gusq/unitaries.hpp"
#include "gusq/version.hpp"

namespace gusq::cli {
namespace {

using Json = nlohmann::json;

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  if (in.fail() || !in.eof()) throw UsageError("not a number: '" + text + "'");
  return v;
}

std::string header_line() { return std::string("gusq ") + kVersion; }

std::string number(double v) { return format_scientific(v == 0.0 ? 0.0 : v); }

std::string complex_entry(cplx v) {
  const double im = v.imag() == 0.0 ? 0.0 : v.imag();
  return number(v.real()) + (std::signbit(im) ? "-" : "+") + number(std::abs(im)) + "j";
}

bool is_binary(const ComplexMatrix& m) {
  return (m.array().imag() == 0.0).all() && ((m.array().real() == 0.0) || (m.array().real() == 1.0)).all();
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
  const bool binary = is_binary(m);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      if (binary)
        out << (m(i, j).real() == 1.0 ? '1' : '0');
      else
        out << complex_entry(m(i, j));
    }
    out << '\n';
  }
}

void emit_json(std::ostream& out, Json doc, bool header) {
  if (header) doc["generator"] = header_line();
  out << doc.dump(2) << '\n';
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct StateInfoArgs {
  std::string z = "0,0";
  std::string alpha = "0,0";
  int modes = 1;
};

void cmd_state_info(const StateInfoArgs& a, bool header, std::ostream& out) {
  if (a.modes < 1) throw UsageError("--modes must be at least 1");
  const cplx z = parse_complex(a.z);
  const cplx alpha = parse_complex(a.alpha);
  const GaussianState state =
      generate_pure_state(SqueezeParams(z * ComplexMatrix::Identity(a.modes, a.modes)),
                          DisplacementParams(ComplexVector::Constant(a.modes, alpha)));
  Json doc = json::to_json(state);
  const RealVector nu = symplectic_eigenvalues(state.cov());
  doc["symplectic_eigenvalues"] = std::vector<double>(nu.data(), nu.data() + nu.size());
  doc["photons"] = mean_photon_number(state);
  emit_json(out, std::move(doc), header);
}

struct PpmOperatorArgs {
  int order = 3;
  int levels = 2;
  std::string emit = "q";
  std::string format = "csv";
};

void cmd_ppm_operator(const PpmOperatorArgs& a, bool header, std::ostream& out, std::ostream& err) {
  const Permutation q = ppm_symmetry_operator(a.order, a.levels);
  std::vector<ComplexMatrix> matrices;
  std::optional<double> residual;
  if (a.emit == "q") {
    matrices.push_back(q.to_matrix());
  } else if (a.emit == "phi") {
    PhaseMatrix phase = ppm_phase_matrix(q, a.order);
    residual = phase.residual;
    matrices.push_back(std::move(phase.phi));
  } else {
    matrices = ppm_projectors(q, a.order);
  }
  if (residual) err << "exp(i*phi) - Q residual: " << number(*residual) << '\n';

  if (a.format == "json") {
    Json doc{{"K", a.order}, {"n", a.levels}, {"emit", a.emit}};
    if (a.emit == "projectors") {
      Json list = Json::array();
      for (const ComplexMatrix& m : matrices) list.push_back(json::to_json(m));
      doc["projectors"] = list;
    } else {
      doc["matrix"] = json::to_json(matrices.front());
    }
    if (residual) doc["residual"] = *residual;
    emit_json(out, std::move(doc), header);
    return;
  }
  if (header) out << "# " << header_line() << '\n';
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    if (a.emit == "projectors") {
      if (m > 0) out << '\n';
      out << "# P_" << m << '\n';
    }
    write_matrix_csv(out, matrices[m]);
  }
}

struct SrmArgs {
  std::string gram;
  std::string constellation;
  std::string path = "auto";
};

void cmd_srm(const SrmArgs& a, bool header, std::ostream& out) {
  if (a.gram.empty() == a.constellation.empty()) throw UsageError("give exactly one of --gram and --constellation");
  const GramMatrix g = a.gram.empty() ? gram_from_constellation(json::constellation_from_json(read_json_file(a.constellation)))
                                      : json::gram_from_json(read_json_file(a.gram));
  DetectionReport report;
  if (a.path == "generic") {
    report = srm_generic(g);
  } else if (a.path == "circulant") {
    if (!is_circulant(g)) throw Error(ErrorCode::kInvalidGram, "Gram matrix is not circulant");
    report = srm_circulant(g.first_row());
  } else {
    report = srm_auto(g);
  }
  emit_json(out, json::to_json(report), header);
}

struct SweepArgs {
  int order = 8;
  double r = 0.0;
  std::string theta = "pi";
  double nr_min = 1e-3;
  double nr_max = 10.0;
  int points = 50;
  std::string spacing = "log";
};

void cmd_ppm_sweep(const SweepArgs& a, bool header, std::ostream& out) {
  const auto rows = pe_sweep(a.order, a.r, parse_angle(a.theta), a.nr_min, a.nr_max, a.points,
                             a.spacing == "linear" ? SweepSpacing::kLinear : SweepSpacing::kLog);
  if (header) out << "# " << header_line() << '\n';
  write_sweep_csv(out, rows);
}

struct OracleArgs {
  double r = 0.0;
  std::string theta = "0";
  std::string alpha = "0";
  int dim = kDefaultFockDim;
};

void cmd_oracle(const OracleArgs& a, bool header, std::ostream& out) {
  if (a.r < 0.0) throw UsageError("--r must be nonnegative");
  if (a.dim < 2) throw UsageError("--dim must be at least 2");
  const SingleModeParams p{a.r, parse_angle(a.theta), parse_complex(a.alpha)};
  const double analytic = std::norm(yuen_inner_product(SingleModeParams::vacuum(), p));
  const OracleOverlap oracle = oracle_overlap(SingleModeParams::vacuum(), p, a.dim);
  const double numeric = std::norm(oracle.value);
  Json doc{{"r", p.r},
           {"theta", p.theta},
           {"alpha", {p.alpha.real(), p.alpha.imag()}},
           {"dim", oracle.dim},
           {"analytic_gamma", analytic},
           {"oracle_gamma", numeric},
           {"abs_diff", std::abs(analytic - numeric)},
           {"truncation_error", oracle.truncation_error}};
  emit_json(out, std::move(doc), header);
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

double parse_angle(const std::string& text) {
  const auto at = text.find("pi");
  if (at == std::string::npos) return parse_real(text);

  std::string coef = text.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double scale = 1.0;
  if (coef == "-") {
    scale = -1.0;
  } else if (!coef.empty() && coef != "+") {
    scale = parse_real(coef);
  }
  const std::string rest = text.substr(at + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw UsageError("bad angle: '" + text + "'");
    const double den = parse_real(rest.substr(1));
    if (den == 0.0) throw UsageError("bad angle: '" + text + "'");
    scale /= den;
  }
  return scale * kPi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian states with geometrically uniform symmetry: SRM detection, PPM analytics, Fock oracle", "gusq"};
  app.set_version_flag("--version", header_line());
  app.require_subcommand(1);
  bool no_header = false;
  app.add_flag("--no-header", no_header, "Omit the version header/field from the output");

  StateInfoArgs state_args;
  CLI::App* state = app.add_subcommand("state-info", "Phase-space report for D(alpha) S(z)|0> on every mode");
  state->add_option("--z", state_args.z, "Squeeze parameter re,im")->capture_default_str();
  state->add_option("--alpha", state_args.alpha, "Displacement re,im")->capture_default_str();
  state->add_option("--modes", state_args.modes, "Number of identical modes")->capture_default_str();

  PpmOperatorArgs op_args;
  CLI::App* op = app.add_subcommand("ppm-operator", "PPM mode-shift symmetry Q, its phase matrix or projectors");
  op->add_option("--K", op_args.order, "PPM order (modes)")->required();
  op->add_option("--n", op_args.levels, "Levels per mode")->required();
  op->add_option("--emit", op_args.emit, "q | phi | projectors")
      ->check(CLI::IsMember({"q", "phi", "projectors"}))
      ->capture_default_str();
  op->add_option("--format", op_args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  SrmArgs srm_args;
  CLI::App* srm = app.add_subcommand("srm", "Square-root measurement from a Gram matrix or constellation file");
  auto* gram_opt = srm->add_option("--gram", srm_args.gram, "Gram JSON {\"re\": [[...]], \"im\": [[...]]}");
  auto* cons_opt = srm->add_option("--constellation", srm_args.constellation, "Constellation JSON");
  gram_opt->excludes(cons_opt);
  srm->add_option("--path", srm_args.path, "auto | generic | circulant")
      ->check(CLI::IsMember({"auto", "generic", "circulant"}))
      ->capture_default_str();

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("ppm-sweep", "PPM error probability versus photons per bit (CSV)");
  sweep->add_option("--K", sweep_args.order, "PPM order")->capture_default_str();
  sweep->add_option("--r", sweep_args.r, "Squeeze magnitude")->capture_default_str();
  sweep->add_option("--theta", sweep_args.theta, "Squeeze phase (radians, 'pi' accepted)")->capture_default_str();
  sweep->add_option("--nr-min", sweep_args.nr_min, "Smallest N_R")->capture_default_str();
  sweep->add_option("--nr-max", sweep_args.nr_max, "Largest N_R")->capture_default_str();
  sweep->add_option("--points", sweep_args.points, "Grid points")->capture_default_str();
  sweep->add_option("--spacing", sweep_args.spacing, "log | linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "Vacuum overlap: closed form versus truncated Fock brute force");
  oracle->add_option("--r", oracle_args.r, "Squeeze magnitude")->capture_default_str();
  oracle->add_option("--theta", oracle_args.theta, "Squeeze phase (radians, 'pi' accepted)")->capture_default_str();
  oracle->add_option("--alpha", oracle_args.alpha, "Displacement (real or re,im)")->capture_default_str();
  oracle->add_option("--dim", oracle_args.dim, "Fock truncation")->capture_default_str();

  for (CLI::App* sub : {state, op, srm, sweep, oracle}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const bool header = !no_header;
  try {
    if (state->parsed()) cmd_state_info(state_args, header, out);
    if (op->parsed()) cmd_ppm_operator(op_args, header, out, err);
    if (srm->parsed()) cmd_srm(srm_args, header, out);
    if (sweep->parsed()) cmd_ppm_sweep(sweep_args, header, out);
    if (oracle->parsed()) cmd_oracle(oracle_args, header, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    if (e.suggested_dim()) err << "suggested dimension: " << *e.suggested_dim() << '\n';
    return static_cast<int>(e.code());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::kNumeric);
  }
  return 0;
}

}  // namespace gusq::cli
