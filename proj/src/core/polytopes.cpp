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

#include "core/polytopes.hpp"

#include <algorithm>
#include <cmath>

namespace sht {

namespace {

using Vec3 = std::array<double, 3>;

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

void push_cyclic(std::vector<Vec3> *out, const Vec3 &v) {
    out->push_back({v[0], v[1], v[2]});
    out->push_back({v[2], v[0], v[1]});
    out->push_back({v[1], v[2], v[0]});
}

void push_sign_combinations(std::vector<Vec3> *out, const Vec3 &v, bool cyclic) {
    std::vector<Vec3> seeds;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            for (int sz : {1, -1}) {
                Vec3 s{sx * v[0], sy * v[1], sz * v[2]};
                bool duplicate = false;
                for (const auto &t : seeds) {
                    if (t == s) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) {
                    seeds.push_back(s);
                }
            }
        }
    }
    for (const auto &s : seeds) {
        if (cyclic) {
            push_cyclic(out, s);
        } else {
            out->push_back(s);
        }
    }
}

std::vector<Vec3> normalized(std::vector<Vec3> vertices) {
    for (auto &v : vertices) {
        double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (auto &c : v) {
            c /= len;
        }
    }
    return vertices;
}

}  // namespace

PlatonicSolid solid_from_name(const std::string &name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "octahedron") return PlatonicSolid::Octahedron;
    if (lower == "tetrahedron") return PlatonicSolid::Tetrahedron;
    if (lower == "cube") return PlatonicSolid::Cube;
    if (lower == "cuboctahedron") return PlatonicSolid::Cuboctahedron;
    if (lower == "icosahedron") return PlatonicSolid::Icosahedron;
    if (lower == "dodecahedron") return PlatonicSolid::Dodecahedron;
    if (lower == "icosidodecahedron") return PlatonicSolid::Icosidodecahedron;
    fail(ErrorKind::UnknownSolid, "unknown solid '" + name + "'");
}

const char *solid_name(PlatonicSolid solid) {
    switch (solid) {
        case PlatonicSolid::Octahedron: return "octahedron";
        case PlatonicSolid::Tetrahedron: return "tetrahedron";
        case PlatonicSolid::Cube: return "cube";
        case PlatonicSolid::Cuboctahedron: return "cuboctahedron";
        case PlatonicSolid::Icosahedron: return "icosahedron";
        case PlatonicSolid::Dodecahedron: return "dodecahedron";
        case PlatonicSolid::Icosidodecahedron: return "icosidodecahedron";
    }
    fail(ErrorKind::UnknownSolid, "invalid solid enum value");
}

std::vector<Vec3> solid_vertices(PlatonicSolid solid) {
    std::vector<Vec3> v;
    switch (solid) {
        case PlatonicSolid::Octahedron:
            v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
            break;
        case PlatonicSolid::Tetrahedron:
            // Canonical orientation: the even-parity corners of the cube.
            v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
            break;
        case PlatonicSolid::Cube:
            push_sign_combinations(&v, {1, 1, 1}, false);
            break;
        case PlatonicSolid::Cuboctahedron:
            push_sign_combinations(&v, {1, 1, 0}, true);
            break;
        case PlatonicSolid::Icosahedron:
            push_sign_combinations(&v, {0, 1, kPhi}, true);
            break;
        case PlatonicSolid::Dodecahedron:
            push_sign_combinations(&v, {1, 1, 1}, false);
            push_sign_combinations(&v, {0, 1.0 / kPhi, kPhi}, true);
            break;
        case PlatonicSolid::Icosidodecahedron:
            push_sign_combinations(&v, {0, 0, kPhi}, true);
            push_sign_combinations(&v, {0.5, kPhi / 2.0, (kPhi + 1.0) / 2.0}, true);
            break;
    }
    return normalized(std::move(v));
}

Povm platonic(PlatonicSolid solid) {
    std::vector<Vec3> vertices = solid_vertices(solid);
    QubitPovmParams params;
    params.weights.assign(vertices.size(), 2.0 / static_cast<double>(vertices.size()));
    params.directions = vertices;
    std::vector<std::string> labels;
    if (solid == PlatonicSolid::Octahedron) {
        labels = {"x+", "x-", "y+", "y-", "z+", "z-"};
    } else {
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            labels.push_back("v" + std::to_string(k));
        }
    }
    return qubit_povm(params, std::move(labels));
}

Povm platonic(const std::string &name) {
    return platonic(solid_from_name(name));
}

Povm builtin_povm(const std::string &name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "sic") {
        return platonic(PlatonicSolid::Tetrahedron);
    }
    if (lower == "inverted-tetrahedron") {
        return inverted(platonic(PlatonicSolid::Tetrahedron));
    }
    return platonic(solid_from_name(lower));
}

std::vector<std::string> builtin_povm_names() {
    return {"octahedron",   "tetrahedron",      "cube",
            "cuboctahedron", "icosahedron",      "dodecahedron",
            "icosidodecahedron", "sic", "inverted-tetrahedron"};
}

}  // namespace sht
