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

#include <array>
#include <string>
#include <vector>

#include "core/povm.hpp"

namespace sht {

enum class PlatonicSolid {
    Octahedron,
    Tetrahedron,
    Cube,
    Cuboctahedron,
    Icosahedron,
    Dodecahedron,
    Icosidodecahedron,
};

/// Lower-case name lookup; throws UnknownSolidError.
PlatonicSolid solid_from_name(const std::string &name);
const char *solid_name(PlatonicSolid solid);

/// Unit vertices, built from exact algebraic coordinates (golden-ratio forms
/// for the icosahedral family) and then normalized, so centrally symmetric
/// solids are centrally symmetric to the last bit.
std::vector<std::array<double, 3>> solid_vertices(PlatonicSolid solid);

/// Qubit measurement with one effect (2/N)(1 + r_k . sigma)/2 per vertex.
Povm platonic(PlatonicSolid solid);
Povm platonic(const std::string &name);

/// Named measurements accepted by the CLI: the seven solids plus the aliases
/// "sic" (tetrahedron) and "inverted-tetrahedron".
Povm builtin_povm(const std::string &name);
std::vector<std::string> builtin_povm_names();

}  // namespace sht
