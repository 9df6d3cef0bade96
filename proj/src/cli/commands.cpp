// Copyright 2026 The sympt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sympt/cli.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympt/circuit_json.hpp"
#include "sympt/compiler.hpp"
#include "sympt/config.hpp"
#include "sympt/core_algebra.hpp"
#include "sympt/errors.hpp"
#include "sympt/evolution.hpp"
#include "sympt/fock_oracle.hpp"
#include "sympt/observables.hpp"
#include "sympt/spectral.hpp"

#ifndef SYMPT_VERSION
#define SYMPT_VERSION "0.0.0"
#endif

namespace sympt::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

struct Options {
  std::string config;
  std::string output;
  std::string format = "csv";
  double t = 1.0;
  bool t_set = false;
  std::string t_grid;
  std::string param;
  std::string range;
  int steps = 101;
  int cutoff = -1;
  int source_mode = 1;
  std::vector<int> orders;
  std::string step_list = "8,16,32,64,128";
  double r_herald = kDefaultRHerald;
  double squeeze_clip = kDefaultSqueezeClip;
};

std::vector<double> split_numbers(const std::string &s, char sep, const std::string &flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw ValidationError(flag + ": cannot parse \"" + item + "\"");
    }
  }
  return out;
}

std::vector<double> time_points(const Options &o, const RunConfig &cfg) {
  if (o.t_set) return {o.t};
  double lo = cfg.t_grid.t_start;
  double hi = cfg.t_grid.t_end;
  int n = cfg.t_grid.n_points;
  if (!o.t_grid.empty()) {
    const auto v = split_numbers(o.t_grid, ':', "--t-grid");
    if (v.size() != 3 || v[2] < 1 || v[2] != std::floor(v[2])) throw ValidationError("--t-grid expects LO:HI:N");
    lo = v[0];
    hi = v[1];
    n = static_cast<int>(v[2]);
  }
  std::vector<double> ts;
  for (int k = 0; k < n; ++k) ts.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
  return ts;
}

std::string header_comment(const RunConfig &cfg) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "# sympt %s config_hash=%016" PRIx64 " seed=%" PRIu64, SYMPT_VERSION,
                config_hash(cfg), cfg.seed);
  return buf;
}

json provenance(const RunConfig &cfg) {
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016" PRIx64, config_hash(cfg));
  return {{"tool", "sympt"}, {"version", SYMPT_VERSION}, {"config_hash", hash}, {"seed", cfg.seed}};
}

std::vector<std::pair<StructuralMatrix, SymmetryRelation>> antilinear_candidates(int n) {
  std::vector<std::pair<StructuralMatrix, SymmetryRelation>> out = {
      {pauli_identity(Pauli::Z, n, StructuralKind::ParityCandidate), SymmetryRelation::Commutes},
      {pauli_identity(Pauli::X, n, StructuralKind::ParityCandidate), SymmetryRelation::Anticommutes},
  };
  if (n == 2) {
    out.push_back({pauli_pair(Pauli::X, Pauli::X, StructuralKind::ParityCandidate), SymmetryRelation::Commutes});
    out.push_back({pauli_pair(Pauli::I, Pauli::X, StructuralKind::ParityCandidate), SymmetryRelation::Commutes});
    out.push_back({pauli_pair(Pauli::Z, Pauli::Z, StructuralKind::ParityCandidate), SymmetryRelation::Commutes});
  }
  return out;
}

std::vector<StructuralMatrix> chiral_candidates(int n) {
  std::vector<StructuralMatrix> out = {pauli_identity(Pauli::Y, n, StructuralKind::Chiral)};
  if (n == 2) out.push_back(pauli_pair(Pauli::I, Pauli::X, StructuralKind::Chiral));
  return out;
}

SpectralOptions spectral_options(const RunConfig &cfg) {
  SpectralOptions s;
  s.cluster_tol = cfg.tolerances.cluster;
  return s;
}

void cmd_spectrum(const Options &o, const RunConfig &cfg, std::ostream &out) {
  const EffectiveHamiltonian H = build_heff(cfg.build_spec());
  const SpectralReport rep = spectrum(H, spectral_options(cfg));
  const PhaseLabel phase = classify_phase(rep, cfg.tolerances.tol_real, cfg.tolerances.cond_threshold);
  std::vector<SymmetryCertificate> certs;
  for (const auto &[P, rel] : antilinear_candidates(H.n_modes)) certs.push_back(check_antilinear_symmetry(H, P, rel));
  for (const auto &Pi : chiral_candidates(H.n_modes)) {
    SymmetryCertificate c = check_chiral(H, Pi);
    c.operator_label = "chiral " + c.operator_label;
    certs.push_back(c);
  }
  auto relation = [](SymmetryRelation r) { return r == SymmetryRelation::Commutes ? "commutes" : "anticommutes"; };

  if (o.format == "json") {
    json doc;
    doc["provenance"] = provenance(cfg);
    json ev = json::array();
    for (const auto &l : rep.eigenvalues) ev.push_back({{"re", l.real()}, {"im", l.imag()}});
    doc["eigenvalues"] = ev;
    doc["phase"] = phase_name(phase.label);
    doc["degenerate"] = phase.degenerate;
    doc["eigvec_condition"] = rep.eigvec_condition;
    doc["min_gap"] = rep.min_gap;
    doc["max_abs_imag"] = rep.max_abs_imag();
    doc["particle_hole_closed"] = particle_hole_check(rep);
    json sy = json::array();
    for (const auto &c : certs) {
      sy.push_back({{"operator", c.operator_label}, {"relation", relation(c.relation)}, {"residual", c.residual},
                    {"holds", c.holds()}});
    }
    doc["symmetries"] = sy;
    out << doc.dump(2) << "\n";
    return;
  }
  out << header_comment(cfg) << "\n";
  out << "record,name,value,value_im\n";
  for (std::size_t k = 0; k < rep.eigenvalues.size(); ++k) {
    out << "eigenvalue," << k + 1 << "," << num(rep.eigenvalues[k].real()) << "," << num(rep.eigenvalues[k].imag())
        << "\n";
  }
  out << "phase," << phase_name(phase.label) << "," << (phase.degenerate ? 1 : 0) << ",\n";
  out << "eigvec_condition,," << num(rep.eigvec_condition) << ",\n";
  out << "min_gap,," << num(rep.min_gap) << ",\n";
  out << "max_abs_imag,," << num(rep.max_abs_imag()) << ",\n";
  out << "particle_hole_closed,," << (particle_hole_check(rep) ? 1 : 0) << ",\n";
  for (const auto &c : certs) {
    out << "symmetry," << c.operator_label << " " << relation(c.relation) << "," << num(c.residual) << ","
        << (c.holds() ? 1 : 0) << "\n";
  }
}

void cmd_evolve(const Options &o, const RunConfig &cfg, std::ostream &out) {
  const EffectiveHamiltonian H = build_heff(cfg.build_spec());
  const int n = H.n_modes;
  json rows = json::array();
  std::ostringstream csv;
  csv << header_comment(cfg) << "\n" << "t";
  for (int p = 1; p <= n; ++p) csv << ",mean_n_" << p;
  for (int p = 1; p <= n; ++p) csv << ",var_n_" << p;
  csv << ",symplectic_residual\n";
  for (double t : time_points(o, cfg)) {
    const SymplecticPropagator M = propagate(H, t, cfg.tolerances.overflow_bound);
    const MomentReport m = vacuum_moments(split_blocks(M));
    csv << num(t);
    for (int p = 0; p < n; ++p) csv << "," << num(m.mean_n[p]);
    for (int p = 0; p < n; ++p) csv << "," << num(m.var_n[p]);
    csv << "," << num(M.symplectic_residual) << "\n";
    rows.push_back({{"t", t},
                    {"mean_n", std::vector<double>(m.mean_n.data(), m.mean_n.data() + n)},
                    {"var_n", std::vector<double>(m.var_n.data(), m.var_n.data() + n)},
                    {"symplectic_residual", M.symplectic_residual}});
  }
  if (o.format == "json") {
    out << json{{"provenance", provenance(cfg)}, {"rows", rows}}.dump(2) << "\n";
  } else {
    out << csv.str();
  }
}

void cmd_sweep(const Options &o, const RunConfig &cfg, std::ostream &out) {
  if (o.param.empty()) throw ValidationError("sweep needs --param");
  const auto r = split_numbers(o.range, ':', "--range");
  if (r.size() != 2 || !(r[0] < r[1])) throw ValidationError("--range expects LO:HI with LO < HI");
  if (o.steps < 2) throw ValidationError("--steps must be at least 2");
  (void)cfg.build_spec(o.param, r[0]);

  json rows = json::array();
  std::ostringstream csv;
  csv << header_comment(cfg) << "\n" << o.param << ",max_abs_imag,min_gap,eigvec_condition,phase\n";
  for (int k = 0; k < o.steps; ++k) {
    const double x = r[0] + (r[1] - r[0]) * k / (o.steps - 1);
    const SpectralReport rep = spectrum(build_heff(cfg.build_spec(o.param, x)), spectral_options(cfg));
    const PhaseLabel ph = classify_phase(rep, cfg.tolerances.tol_real, cfg.tolerances.cond_threshold);
    csv << num(x) << "," << num(rep.max_abs_imag()) << "," << num(rep.min_gap) << "," << num(rep.eigvec_condition)
        << "," << phase_name(ph.label) << "\n";
    rows.push_back({{o.param, x},
                    {"max_abs_imag", rep.max_abs_imag()},
                    {"min_gap", rep.min_gap},
                    {"eigvec_condition", rep.eigvec_condition},
                    {"phase", phase_name(ph.label)}});
  }

  TransitionOptions topt;
  topt.tol_real = cfg.tolerances.tol_real;
  topt.cond_threshold = cfg.tolerances.cond_threshold;
  topt.spectral = spectral_options(cfg);
  json transition = nullptr;
  std::string line = "# transition: none";
  try {
    const TransitionResult tr =
        locate_transition([&](double x) { return cfg.build_spec(o.param, x); }, r[0], r[1], topt);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "param_star=%.6f, kind=%s", tr.param_star, transition_name(tr.kind).c_str());
    line = std::string("# transition: ") + buf;
    transition = {{"param_star", tr.param_star},
                  {"kind", transition_name(tr.kind)},
                  {"eigvec_condition", tr.eigvec_condition},
                  {"min_gap", tr.min_gap}};
  } catch (const NoTransition &) {
  }
  if (o.format == "json") {
    out << json{{"provenance", provenance(cfg)}, {"rows", rows}, {"transition", transition}}.dump(2) << "\n";
  } else {
    out << csv.str() << line << "\n";
  }
}

void cmd_compile(const Options &o, const RunConfig &cfg, std::ostream &out) {
  if (o.format != "json") throw ValidationError("compile writes JSON only (use --format json)");
  const QuadraticHamiltonianSpec spec = cfg.build_spec();
  const SymplecticPropagator M = propagate(build_heff(spec), o.t, cfg.tolerances.overflow_bound);
  const SvdTriple svd = symplectic_svd(M);
  EmitOptions eo;
  eo.r_herald = o.r_herald;
  eo.squeeze_clip = o.squeeze_clip;
  if (o.source_mode < 1 || o.source_mode > spec.n_modes()) throw ValidationError("--source-mode out of range");
  const CircuitProgram prog = emit_circuit(svd, o.source_mode - 1, eo);
  out << circuit_to_json(prog, svd.reconstruction_residual) << "\n";
}

void cmd_oracle(const Options &o, const RunConfig &cfg, std::ostream &out) {
  const QuadraticHamiltonianSpec spec = cfg.build_spec();
  const int cutoff = o.cutoff > 0 ? o.cutoff : cfg.cutoff;
  const FockBasis basis(spec.n_modes(), cutoff);
  json rows = json::array();
  std::ostringstream csv;
  csv << header_comment(cfg) << "\n"
      << "t,mode,mean_oracle,mean_symplectic,var_oracle,var_symplectic,mean_discrepancy,var_discrepancy,"
         "norm_leakage,tolerance,pass\n";
  for (double t : time_points(o, cfg)) {
    const DiscrepancyReport d = compare_symplectic(spec, t, basis);
    for (int p = 0; p < spec.n_modes(); ++p) {
      const double dm = std::abs(d.mean_oracle[p] - d.mean_symplectic[p]);
      const double dv = std::abs(d.var_oracle[p] - d.var_symplectic[p]);
      csv << num(t) << "," << p + 1 << "," << num(d.mean_oracle[p]) << "," << num(d.mean_symplectic[p]) << ","
          << num(d.var_oracle[p]) << "," << num(d.var_symplectic[p]) << "," << num(dm) << "," << num(dv) << ","
          << num(d.norm_leakage) << "," << num(d.tolerance) << "," << (d.pass ? 1 : 0) << "\n";
      rows.push_back({{"t", t},
                      {"mode", p + 1},
                      {"mean_oracle", d.mean_oracle[p]},
                      {"mean_symplectic", d.mean_symplectic[p]},
                      {"var_oracle", d.var_oracle[p]},
                      {"var_symplectic", d.var_symplectic[p]},
                      {"norm_leakage", d.norm_leakage},
                      {"pass", d.pass}});
    }
  }
  if (o.format == "json") {
    out << json{{"provenance", provenance(cfg)}, {"cutoff", cutoff}, {"rows", rows}}.dump(2) << "\n";
  } else {
    out << csv.str();
  }
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void cmd_trotter(const Options &o, const RunConfig &cfg, std::ostream &out) {
  const QuadraticHamiltonianSpec spec = cfg.build_spec();
  const HamiltonianTermList terms = split_passive_squeezing(spec);
  const SymplecticPropagator exact = propagate(build_heff(spec), o.t, cfg.tolerances.overflow_bound);
  std::vector<int> steps;
  for (double s : split_numbers(o.step_list, ',', "--step-list")) {
    if (s < 1 || s != std::floor(s)) throw ValidationError("--step-list entries must be positive integers");
    steps.push_back(static_cast<int>(s));
  }
  std::vector<int> orders = o.orders.empty() ? std::vector<int>{1, 2} : o.orders;
  json rows = json::array();
  json slopes = json::object();
  std::ostringstream csv;
  std::ostringstream tail;
  csv << header_comment(cfg) << "\n" << "n_steps,order,error_norm\n";
  for (int order : orders) {
    if (order != 1 && order != 2) throw ValidationError("--order must be 1 or 2");
    std::vector<double> xs, ys;
    for (int n : steps) {
      const SymplecticPropagator M = trotter_propagate(terms, o.t, n, static_cast<TrotterOrder>(order),
                                                       cfg.tolerances.overflow_bound);
      const double err = (M.matrix - exact.matrix).norm();
      csv << n << "," << order << "," << num(err) << "\n";
      rows.push_back({{"n_steps", n}, {"order", order}, {"error_norm", err}});
      if (err > 0.0) {
        xs.push_back(n);
        ys.push_back(err);
      }
    }
    if (xs.size() >= 2) {
      const double s = loglog_slope(xs, ys);
      tail << "# slope order=" << order << ": " << num(s) << "\n";
      slopes[std::to_string(order)] = s;
    }
  }
  if (o.format == "json") {
    out << json{{"provenance", provenance(cfg)}, {"t", o.t}, {"rows", rows}, {"slopes", slopes}}.dump(2) << "\n";
  } else {
    out << csv.str() << tail.str();
  }
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file \"" + o.output + "\"");
  f << text;
}

}  // namespace

std::string version() { return SYMPT_VERSION; }

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Effective-Hamiltonian analysis, evolution and circuit compilation for quadratic bosonic systems",
               "sympt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SYMPT_VERSION);
  Options o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--config", o.config, "JSON run configuration")->required();
    sub->add_option("--output", o.output, "write output here instead of stdout");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_time = [&](CLI::App *sub) {
    sub->add_option("--t", o.t, "evolution time");
  };

  CLI::App *spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues, phase label and symmetry certificates");
  add_common(spectrum_cmd);
  CLI::App *evolve_cmd = app.add_subcommand("evolve", "vacuum occupations and variances over a time grid");
  add_common(evolve_cmd);
  add_time(evolve_cmd);
  evolve_cmd->add_option("--t-grid", o.t_grid, "LO:HI:N");
  CLI::App *sweep_cmd = app.add_subcommand("sweep", "parameter sweep with transition location");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--param", o.param, "preset parameter to vary")->required();
  sweep_cmd->add_option("--range", o.range, "LO:HI")->required();
  sweep_cmd->add_option("--steps", o.steps, "number of sample points");
  CLI::App *compile_cmd = app.add_subcommand("compile", "compile M(t) into an optical circuit");
  add_common(compile_cmd);
  add_time(compile_cmd);
  compile_cmd->add_option("--source-mode", o.source_mode, "1-based mode receiving the single photon");
  compile_cmd->add_option("--r-herald", o.r_herald, "herald two-mode squeezing");
  compile_cmd->add_option("--squeeze-clip", o.squeeze_clip, "largest accepted squeezing r");
  CLI::App *oracle_cmd = app.add_subcommand("oracle", "Fock-space cross-check of occupations and variances");
  add_common(oracle_cmd);
  add_time(oracle_cmd);
  oracle_cmd->add_option("--t-grid", o.t_grid, "LO:HI:N");
  oracle_cmd->add_option("--cutoff", o.cutoff, "per-mode photon cutoff");
  CLI::App *trotter_cmd = app.add_subcommand("trotter-bench", "Trotter error against the exact propagator");
  add_common(trotter_cmd);
  add_time(trotter_cmd);
  trotter_cmd->add_option("--order", o.orders, "1 or 2; repeatable");
  trotter_cmd->add_option("--step-list", o.step_list, "comma-separated step counts");

  compile_cmd->get_option("--format")->default_str("json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion &) {
    out << SYMPT_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error kind=UsageError message=\"" << escape(e.what()) << "\"\n";
    return 1;
  }

  for (CLI::App *sub : {evolve_cmd, compile_cmd, oracle_cmd, trotter_cmd}) {
    if (sub->parsed() && sub->count("--t") > 0) o.t_set = true;
  }
  if (compile_cmd->parsed() && compile_cmd->count("--format") == 0) o.format = "json";

  try {
    const RunConfig cfg = load_config(o.config);
    std::ostringstream buf;
    if (spectrum_cmd->parsed()) cmd_spectrum(o, cfg, buf);
    else if (evolve_cmd->parsed()) cmd_evolve(o, cfg, buf);
    else if (sweep_cmd->parsed()) cmd_sweep(o, cfg, buf);
    else if (compile_cmd->parsed()) cmd_compile(o, cfg, buf);
    else if (oracle_cmd->parsed()) cmd_oracle(o, cfg, buf);
    else if (trotter_cmd->parsed()) cmd_trotter(o, cfg, buf);
    emit(o, buf.str(), out);
  } catch (const Error &e) {
    err << "error kind=" << e.kind() << " message=\"" << escape(e.what()) << "\"\n";
    return e.error_class() == ErrorClass::Validation ? 1 : 2;
  } catch (const std::exception &e) {
    err << "error kind=InternalError message=\"" << escape(e.what()) << "\"\n";
    return 2;
  }
  return 0;
}

}  // namespace sympt::cli
