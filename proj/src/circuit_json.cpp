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

#include "sympt/circuit_json.hpp"

#include "json.hpp"
#include "sympt/errors.hpp"

namespace sympt {

namespace {

using nlohmann::json;

GateType parse_type(const std::string &s) {
  if (s == "ps") return GateType::PhaseShift;
  if (s == "bs") return GateType::BeamSplitter;
  if (s == "sq") return GateType::SingleModeSqueeze;
  if (s == "tmsh") return GateType::TwoModeSqueezeHerald;
  throw ValidationError("unknown gate type \"" + s + "\"");
}

std::size_t expected_arity(GateType t) {
  return t == GateType::PhaseShift || t == GateType::SingleModeSqueeze ? 1 : 2;
}

}  // namespace

std::string circuit_to_json(const CircuitProgram &program, double reconstruction_residual) {
  json doc;
  doc["n_modes"] = program.n_modes;
  json anc = json::array();
  for (int a : program.ancilla_modes) anc.push_back(a + 1);
  doc["ancilla_modes"] = anc;
  doc["source_mode"] = program.source_mode + 1;

  json gates = json::array();
  for (const auto &g : program.gates) {
    json jg;
    jg["type"] = gate_type_name(g.type);
    json modes = json::array();
    for (int m : g.modes) modes.push_back(m + 1);
    jg["modes"] = modes;
    switch (g.type) {
      case GateType::PhaseShift:
        jg["phi"] = g.phi;
        break;
      case GateType::BeamSplitter:
        jg["theta"] = g.theta;
        jg["phi"] = g.phi;
        break;
      case GateType::SingleModeSqueeze:
        jg["r"] = g.r;
        jg["phi"] = g.phi;
        break;
      case GateType::TwoModeSqueezeHerald:
        jg["r"] = g.r;
        break;
    }
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);

  json meta;
  meta["r_herald"] = program.r_herald;
  meta["herald_first_order_valid"] = program.r_herald < 0.3;
  meta["herald_validity_condition"] = "r_herald << 1";
  meta["bs_convention"] = "T(theta,phi) = [[exp(i phi) cos theta, -sin theta], [exp(i phi) sin theta, cos theta]]";
  meta["sq_convention"] = "a_dag -> cosh(r) a_dag + exp(-i phi) sinh(r) a";
  meta["tmsh_convention"] = "exp(r (a_j a_b - a_dag_j a_dag_b)), herald on b";
  meta["stages"] = {"squeeze_inverse", "mesh", "herald", "mesh", "squeeze", "mesh"};
  if (reconstruction_residual >= 0.0) meta["reconstruction_residual"] = reconstruction_residual;
  doc["metadata"] = std::move(meta);
  return doc.dump(2);
}

CircuitProgram circuit_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(e.what());
  }
  CircuitProgram prog;
  try {
    prog.n_modes = doc.at("n_modes").get<int>();
    for (int a : doc.at("ancilla_modes")) prog.ancilla_modes.push_back(a - 1);
    prog.source_mode = doc.at("source_mode").get<int>() - 1;
    if (doc.contains("metadata") && doc["metadata"].contains("r_herald")) {
      prog.r_herald = doc["metadata"]["r_herald"].get<double>();
    }
    const int total = prog.n_modes + static_cast<int>(prog.ancilla_modes.size());
    for (const auto &jg : doc.at("gates")) {
      Gate g;
      g.type = parse_type(jg.at("type").get<std::string>());
      for (int m : jg.at("modes")) {
        if (m < 1 || m > total) throw ValidationError("gate mode out of range");
        g.modes.push_back(m - 1);
      }
      if (g.modes.size() != expected_arity(g.type)) {
        throw ValidationError("gate \"" + gate_type_name(g.type) + "\" has the wrong number of modes");
      }
      g.theta = jg.value("theta", 0.0);
      g.phi = jg.value("phi", 0.0);
      g.r = jg.value("r", 0.0);
      prog.gates.push_back(std::move(g));
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("circuit schema: ") + e.what());
  }
  return prog;
}

}  // namespace sympt
