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

#include "sympt/config.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sympt/errors.hpp"

namespace sympt::cli {

namespace {

using nlohmann::json;

const std::map<std::string, std::map<std::string, double>> &preset_defaults() {
  static const std::map<std::string, std::map<std::string, double>> table = {
      {"bs", {{"omega1", 1.0}, {"omega2", 1.0}, {"g", 0.5}}},
      {"tms", {{"omega1", 1.0}, {"omega2", 1.0}, {"kappa", 0.6}}},
      {"sms", {{"omega0", 1.0}, {"kappa", 0.6}}},
      {"random", {}},
      {"inline", {}},
  };
  return table;
}

std::string location(const std::string &text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

cplx parse_entry(const json &v, const std::string &where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_object()) {
    for (const auto &[key, _] : v.items()) {
      if (key != "re" && key != "im") throw ValidationError(where + ": unexpected key \"" + key + "\"");
    }
    return {v.value("re", 0.0), v.value("im", 0.0)};
  }
  throw ValidationError(where + ": entries must be numbers or {re, im} objects");
}

CMatrix parse_matrix(const json &m, const std::string &name) {
  if (!m.is_array() || m.empty()) throw ValidationError(name + " must be a non-empty array of rows");
  const std::size_t n = m.size();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw ValidationError(name + " must be square");
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = parse_entry(m[i][j], name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return out;
}

double positive(double v, const std::string &name) {
  if (!(v > 0.0)) throw ValidationError(name + " must be positive");
  return v;
}

}  // namespace

QuadraticHamiltonianSpec RunConfig::build_spec(const std::string &param, double value) const {
  std::map<std::string, double> p = params;
  if (!param.empty()) {
    if (p.find(param) == p.end()) {
      throw ValidationError("parameter \"" + param + "\" is not defined for preset \"" + preset + "\"");
    }
    p[param] = value;
  }
  if (preset == "bs") return preset_beam_splitter(p.at("omega1"), p.at("omega2"), p.at("g"));
  if (preset == "tms") return preset_two_mode_squeezer(p.at("omega1"), p.at("omega2"), p.at("kappa"));
  if (preset == "sms") return preset_cross_sms(p.at("omega0"), p.at("kappa"));
  if (preset == "random") {
    std::mt19937_64 rng(seed);
    return random_spec(n_modes, rng);
  }
  return validate_spec(*W, *K, tolerances.spec);
}

RunConfig parse_config(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    std::string what = e.what();
    const auto pos = what.find("parse error");
    throw ParseError(location(text, e.byte) + ": " + (pos == std::string::npos ? what : what.substr(pos)));
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");

  static const std::set<std::string> known = {"preset", "omega1", "omega2", "g", "kappa", "omega0",
                                              "n_modes", "W", "K", "tolerances", "seed", "t_grid",
                                              "cutoff"};
  for (const auto &[key, _] : doc.items()) {
    if (!known.count(key)) throw ValidationError("unknown config key \"" + key + "\"");
  }

  RunConfig cfg;
  cfg.canonical = doc.dump();
  try {
    const bool has_matrix = doc.contains("W") || doc.contains("K");
    if (doc.contains("preset") && !doc["preset"].is_null()) {
      cfg.preset = doc["preset"].get<std::string>();
      if (!preset_defaults().count(cfg.preset) || cfg.preset == "inline") {
        throw ValidationError("unknown preset \"" + cfg.preset + "\"");
      }
      if (has_matrix) throw ValidationError("give either a preset or inline W/K, not both");
    } else {
      if (!doc.contains("W")) throw ValidationError("config needs a preset or an inline W");
      cfg.preset = "inline";
    }

    cfg.params = preset_defaults().at(cfg.preset);
    for (auto &[name, v] : cfg.params) {
      if (doc.contains(name)) v = doc[name].get<double>();
    }
    for (const char *name : {"omega1", "omega2", "g", "kappa", "omega0"}) {
      if (doc.contains(name) && !cfg.params.count(name)) {
        throw ValidationError(std::string("parameter \"") + name + "\" does not apply to preset \"" + cfg.preset + "\"");
      }
    }

    cfg.seed = doc.value("seed", std::uint64_t{0});
    cfg.cutoff = doc.value("cutoff", 12);
    if (cfg.cutoff < 1) throw ValidationError("cutoff must be at least 1");
    if (cfg.preset == "random") {
      cfg.n_modes = doc.value("n_modes", 2);
      if (cfg.n_modes < 1 || cfg.n_modes > 64) throw ValidationError("n_modes must lie in 1..64");
    }

    if (doc.contains("tolerances")) {
      const json &t = doc["tolerances"];
      if (!t.is_object()) throw ValidationError("tolerances must be an object");
      Tolerances &tol = cfg.tolerances;
      for (const auto &[key, v] : t.items()) {
        const double x = positive(v.get<double>(), "tolerances." + key);
        if (key == "spec") tol.spec = x;
        else if (key == "tol_real") tol.tol_real = x;
        else if (key == "cond_threshold") tol.cond_threshold = x;
        else if (key == "cluster") tol.cluster = x;
        else if (key == "overflow_bound") tol.overflow_bound = x;
        else throw ValidationError("unknown tolerance \"" + key + "\"");
      }
    }

    if (doc.contains("t_grid")) {
      const json &g = doc["t_grid"];
      cfg.t_grid.t_start = g.at("t_start").get<double>();
      cfg.t_grid.t_end = g.at("t_end").get<double>();
      cfg.t_grid.n_points = g.at("n_points").get<int>();
      if (cfg.t_grid.n_points < 1) throw ValidationError("t_grid.n_points must be at least 1");
    }

    if (cfg.preset == "inline") {
      cfg.W = parse_matrix(doc["W"], "W");
      const auto n = cfg.W->rows();
      cfg.K = doc.contains("K") ? parse_matrix(doc["K"], "K") : CMatrix(CMatrix::Zero(n, n));
      cfg.n_modes = static_cast<int>(n);
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("config: ") + e.what());
  }

  try {
    (void)cfg.build_spec();
  } catch (const Error &e) {
    if (e.error_class() == ErrorClass::Validation) throw ValidationError(e.what());
    throw;
  }
  return cfg;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::uint64_t config_hash(const RunConfig &config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config.canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sympt::cli
