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

#pragma once

#include <string>

#include "sympt/compiler.hpp"

namespace sympt {

// Circuit interchange format. Modes are 1-based in the document:
//
//   {"n_modes": N, "ancilla_modes": [b], "source_mode": j,
//    "gates": [{"type": "ps"|"bs"|"sq"|"tmsh", "modes": [..],
//               "theta": θ?, "phi": φ?, "r": r?}, ...],
//    "metadata": {...}}
//
// ps carries phi; bs carries theta and phi; sq carries r and phi; tmsh
// carries r. Gate order is execution order.

std::string circuit_to_json(const CircuitProgram &program, double reconstruction_residual = -1.0);

/// Throws ParseError on malformed JSON and ValidationError on schema errors.
CircuitProgram circuit_from_json(const std::string &text);

}  // namespace sympt
