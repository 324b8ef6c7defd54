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

// Test-only helpers. naive_shadows is the independent oracle for frame
// inversion: it uses an entrywise real coordinate system and a hand-rolled
// Gauss-Jordan solve, sharing no code with the production inversion path.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "core/anneal.hpp"
#include "core/norms.hpp"
#include "core/polytopes.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

namespace sht::test {

// ---- independent frame-inversion oracle ------------------------------------

// Real coordinates of a Hermitian matrix: diagonal entries, then (Re, Im) of
// each strict upper-triangle entry, row by row.
inline std::vector<double> entry_coords(const Matrix &m) {
    int d = static_cast<int>(m.rows());
    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        coords.push_back(m(i, i).real());
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            coords.push_back(m(i, j).real());
            coords.push_back(m(i, j).imag());
        }
    }
    return coords;
}

inline Matrix entry_uncoords(const std::vector<double> &coords, int d) {
    Matrix m = Matrix::Zero(d, d);
    std::size_t at = 0;
    for (int i = 0; i < d; ++i) {
        m(i, i) = coords[at++];
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            double re = coords[at++];
            double im = coords[at++];
            m(i, j) = Complex(re, im);
            m(j, i) = Complex(re, -im);
        }
    }
    return m;
}

// sum_k tr(X E_k) E_k evaluated directly on complex matrices.
inline Matrix apply_frame_direct(const Povm &povm, const Matrix &x) {
    Matrix out = Matrix::Zero(x.rows(), x.cols());
    for (const auto &effect : povm.effects()) {
        Complex overlap = (x * effect.matrix()).trace();
        out += overlap.real() * effect.matrix();
    }
    return out;
}

// Gauss-Jordan with partial pivoting; returns false on a (near-)singular
// system.
inline bool gauss_solve(std::vector<std::vector<double>> a, std::vector<double> &b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-13) {
            return false;
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        double inv = 1.0 / a[col][col];
        for (std::size_t c = col; c < n; ++c) {
            a[col][c] *= inv;
        }
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0.0) {
                continue;
            }
            double factor = a[row][col];
            for (std::size_t c = col; c < n; ++c) {
                a[row][c] -= factor * a[col][c];
            }
            b[row] -= factor * b[col];
        }
    }
    return true;
}

// Independent classical shadows: solve C_E(rho_k) = E_k entrywise.
inline std::vector<HermitianOperator> naive_shadows(const Povm &povm) {
    int d = povm.dim();
    std::size_t n = static_cast<std::size_t>(d) * d;

    // Column m of the frame matrix = coords of C_E applied to basis vector m.
    std::vector<std::vector<double>> frame(n, std::vector<double>(n, 0.0));
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<double> unit(n, 0.0);
        unit[m] = 1.0;
        std::vector<double> image = entry_coords(apply_frame_direct(povm, entry_uncoords(unit, d)));
        for (std::size_t row = 0; row < n; ++row) {
            frame[row][m] = image[row];
        }
    }

    std::vector<HermitianOperator> shadows;
    shadows.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        std::vector<double> rhs = entry_coords(effect.matrix());
        if (!gauss_solve(frame, rhs)) {
            fail(ErrorKind::NotInformationallyComplete, "oracle: singular frame");
        }
        shadows.push_back(HermitianOperator(entry_uncoords(rhs, d)));
    }
    return shadows;
}

// ---- random inputs -----------------------------------------------------------

inline Matrix random_complex_matrix(CounterRng &rng, int d) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            g(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    return g;
}

inline HermitianOperator random_hermitian(CounterRng &rng, int d, double scale = 1.0) {
    Matrix g = random_complex_matrix(rng, d);
    return HermitianOperator((g + g.adjoint()) * (scale / 2.0));
}

inline HermitianOperator random_density(CounterRng &rng, int d) {
    Matrix g = random_complex_matrix(rng, d);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return HermitianOperator(rho);
}

// Random informationally complete measurement: random PSD effects A_k,
// normalized as S^{-1/2} A_k S^{-1/2} with S their sum.
inline Povm random_povm(CounterRng &rng, int d, std::size_t outcomes) {
    std::vector<Matrix> raw;
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < outcomes; ++k) {
        Matrix g = random_complex_matrix(rng, d);
        raw.push_back(g * g.adjoint());
        sum += raw.back();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sum);
    Matrix inv_sqrt = solver.eigenvectors() *
                      solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      solver.eigenvectors().adjoint();
    std::vector<HermitianOperator> effects;
    effects.reserve(outcomes);
    for (const auto &a : raw) {
        effects.push_back(HermitianOperator(inv_sqrt * a * inv_sqrt));
    }
    return Povm::validate(std::move(effects));
}

// Random uniform-trace qubit measurement: directions in the unit ball with
// zero mean, weights 2/N.
inline Povm random_uniform_trace_qubit_povm(CounterRng &rng, std::size_t outcomes) {
    QubitPovmParams params;
    params.weights.assign(outcomes, 2.0 / static_cast<double>(outcomes));
    std::array<double, 3> mean{0, 0, 0};
    for (std::size_t k = 0; k < outcomes; ++k) {
        std::array<double, 3> v;
        double len2;
        do {
            for (auto &c : v) {
                c = 2.0 * rng.next_unit() - 1.0;
            }
            len2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        } while (len2 > 1.0 || len2 < 1e-6);
        params.directions.push_back(v);
        for (int i = 0; i < 3; ++i) {
            mean[i] += v[i] / static_cast<double>(outcomes);
        }
    }
    double max_len = 0.0;
    for (auto &v : params.directions) {
        for (int i = 0; i < 3; ++i) {
            v[i] -= mean[i];
        }
        max_len = std::max(max_len, std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
    }
    if (max_len > 1.0) {
        for (auto &v : params.directions) {
            for (auto &c : v) {
                c /= max_len;
            }
        }
    }
    return qubit_povm(params);
}

// ---- geometry -----------------------------------------------------------------

// Least max-distance between two equal-size direction sets over proper
// rotations and assignments (Kabsch per permutation). Feasible for N <= 8.
inline double bloch_set_distance(std::vector<std::array<double, 3>> a,
                                 std::vector<std::array<double, 3>> b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        Eigen::Matrix3d cross = Eigen::Matrix3d::Zero();
        for (std::size_t i = 0; i < n; ++i) {
            Eigen::Vector3d va(a[i][0], a[i][1], a[i][2]);
            Eigen::Vector3d vb(b[perm[i]][0], b[perm[i]][1], b[perm[i]][2]);
            cross += va * vb.transpose();
        }
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(cross,
                                              Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::Matrix3d u = svd.matrixU();
        Eigen::Matrix3d v = svd.matrixV();
        Eigen::Matrix3d rot = v * u.transpose();
        if (rot.determinant() < 0) {
            Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
            flip(2, 2) = -1;
            rot = v * flip * u.transpose();
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Eigen::Vector3d va(a[i][0], a[i][1], a[i][2]);
            Eigen::Vector3d vb(b[perm[i]][0], b[perm[i]][1], b[perm[i]][2]);
            worst = std::max(worst, (rot * va - vb).norm());
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::vector<std::array<double, 3>> povm_directions(const Povm &povm) {
    QubitPovmParams params = qubit_params(povm);
    return params.directions;
}

// Projections onto the vertex directions of a solid.
inline std::vector<HermitianOperator> vertex_projections(PlatonicSolid solid, bool invert = false) {
    std::vector<HermitianOperator> out;
    for (auto v : solid_vertices(solid)) {
        if (invert) {
            for (auto &c : v) {
                c = -c;
            }
        }
        out.push_back(spin_projector(v));
    }
    return out;
}

}  // namespace sht::test
