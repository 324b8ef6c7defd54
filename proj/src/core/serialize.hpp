// Copyright 2026 The shadowtomo Authors
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

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "core/povm.hpp"

namespace sht {

using Json = nlohmann::json;

// Operators serialize as {"dim": D, "re": [[..]], "im": [[..]]}; qubit
// operators are also accepted in the Bloch shorthand {"x0": t, "r": [x,y,z]}.
Json operator_to_json(const HermitianOperator &op);
HermitianOperator operator_from_json(const Json &j);

// Measurements serialize as {"dim": D, "effects": [...], "labels": [...]};
// the qubit shorthand {"dim": 2, "bloch": [{"w": w, "v": [x,y,z]}, ...]} is
// accepted on input.
Json povm_to_json(const Povm &povm);
Povm povm_from_json(const Json &j);

// A plain array of operators, or {"observables": [...]}.
std::vector<HermitianOperator> observables_from_json(const Json &j);

struct FactorizedObservables {
    std::size_t qubits;
    std::vector<std::vector<HermitianOperator>> factors;
};

// {"qubits": n, "observables": [{"factors": [op, ...]}, ...]}.
FactorizedObservables factorized_observables_from_json(const Json &j);

/// json::parse with parse failures rethrown as ParseError.
Json parse_json(const std::string &text);

}  // namespace sht
