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

#include "core/norms.hpp"

#include <cmath>

#include "core/tolerances.hpp"

namespace sht {

namespace {

HermitianOperator top_eigenprojector(const HermitianOperator &m) {
    if (m.dim() == 2) {
        BlochVector b = to_bloch(m);
        double len = std::sqrt(b.r[0] * b.r[0] + b.r[1] * b.r[1] + b.r[2] * b.r[2]);
        if (len <= 1e-12 * std::max(1.0, std::abs(b.x0))) {
            // Fully degenerate: every state attains the maximum; the largest
            // Bloch vector in lexicographic order is +x.
            return spin_projector({1.0, 0.0, 0.0});
        }
        return spin_projector({b.r[0] / len, b.r[1] / len, b.r[2] / len});
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
    Eigen::VectorXcd top = solver.eigenvectors().col(m.dim() - 1);
    // Canonical phase: largest entry real and positive.
    Eigen::Index max_index = 0;
    top.cwiseAbs().maxCoeff(&max_index);
    Complex phase = top(max_index) / std::abs(top(max_index));
    top /= phase;
    return hermitian_unchecked(top * top.adjoint());
}

void check_density(const HermitianOperator &rho) {
    if (std::abs(rho.trace() - 1.0) > tol::kNormalization ||
        min_eigenvalue(rho) < tol::kPsdFloor) {
        fail(ErrorKind::InvalidState, "state is not a density operator");
    }
}

// Precomputed Bloch data for fast projection-norm sweeps over a qubit
// measurement: w_k(n) = (s0_k + s_k . n) / 2 and the norm operator has Bloch
// coordinates sum_k w_k^2 (e0_k, e_k).
struct QubitNormSweep {
    std::vector<double> shadow_x0, effect_x0;
    std::vector<std::array<double, 3>> shadow_r, effect_r;

    explicit QubitNormSweep(const Povm &povm) {
        auto shadows = classical_shadows(povm);
        for (std::size_t k = 0; k < povm.size(); ++k) {
            BlochVector s = to_bloch(shadows->shadow(k));
            BlochVector e = to_bloch(povm.effect(k));
            shadow_x0.push_back(s.x0);
            shadow_r.push_back(s.r);
            effect_x0.push_back(e.x0);
            effect_r.push_back(e.r);
        }
    }

    double squared_norm_at(const std::array<double, 3> &n) const {
        double m0 = 0.0, mx = 0.0, my = 0.0, mz = 0.0;
        for (std::size_t k = 0; k < shadow_x0.size(); ++k) {
            const auto &s = shadow_r[k];
            double w = 0.5 * (shadow_x0[k] + s[0] * n[0] + s[1] * n[1] + s[2] * n[2]);
            double w2 = w * w;
            m0 += w2 * effect_x0[k];
            mx += w2 * effect_r[k][0];
            my += w2 * effect_r[k][1];
            mz += w2 * effect_r[k][2];
        }
        return 0.5 * (m0 + std::sqrt(mx * mx + my * my + mz * mz));
    }
};

}  // namespace

NormReport squared_shadow_norm(const Povm &povm, const HermitianOperator &x) {
    require(x.dim() == povm.dim(), ErrorKind::Dimension,
            "observable dimension does not match the measurement");
    auto shadows = classical_shadows(povm);
    std::vector<double> weights;
    weights.reserve(povm.size());
    Matrix acc = Matrix::Zero(povm.dim(), povm.dim());
    for (std::size_t k = 0; k < povm.size(); ++k) {
        double w = trace_product(shadows->shadow(k), x);
        weights.push_back(w * w);
        acc += (w * w) * povm.effect(k).matrix();
    }
    HermitianOperator norm_operator = hermitian_unchecked(std::move(acc));
    return NormReport{max_eigenvalue(norm_operator), top_eigenprojector(norm_operator),
                      std::move(weights)};
}

double estimator_variance(const Povm &povm, const HermitianOperator &x,
                          const HermitianOperator &rho) {
    require(x.dim() == povm.dim() && rho.dim() == povm.dim(), ErrorKind::Dimension,
            "dimensions do not match the measurement");
    check_density(rho);
    auto shadows = classical_shadows(povm);
    double second_moment = 0.0;
    for (std::size_t k = 0; k < povm.size(); ++k) {
        double w = trace_product(shadows->shadow(k), x);
        second_moment += w * w * trace_product(rho, povm.effect(k));
    }
    double mean = trace_product(rho, x);
    return second_moment - mean * mean;
}

double average_squared_norm(const Povm &povm, const HermitianOperator &x) {
    require(x.dim() == povm.dim(), ErrorKind::Dimension,
            "observable dimension does not match the measurement");
    if (std::abs(x.trace()) > tol::kNormalization ||
        std::abs(trace_product(x, x) - 1.0) > tol::kNormalization) {
        fail(ErrorKind::Normalization,
             "observable must be traceless and normalized to tr(X^2) = 1");
    }
    auto shadows = classical_shadows(povm);
    double total = 0.0;
    for (std::size_t k = 0; k < povm.size(); ++k) {
        double w = trace_product(shadows->shadow(k), x);
        total += w * w * povm.effect(k).trace();
    }
    return total;
}

double factorized_squared_norm(std::span<const Povm> povms,
                               std::span<const HermitianOperator> factors) {
    require(povms.size() == factors.size() && !povms.empty(), ErrorKind::Dimension,
            "need one observable factor per site");
    double log_sum = 0.0;
    for (std::size_t s = 0; s < povms.size(); ++s) {
        double site = squared_shadow_norm(povms[s], factors[s]).squared_norm;
        if (site <= 0.0) {
            return 0.0;
        }
        log_sum += std::log(site);
    }
    return std::exp(log_sum);
}

double octahedron_bound(const Povm &povm) {
    require(povm.dim() == 2, ErrorKind::Dimension, "bound applies to qubit measurements");
    require(povm.is_uniform_trace(), ErrorKind::NotUniform,
            "bound applies to uniform-trace measurements");
    QubitPovmParams params = qubit_params(povm);
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    for (const auto &v : params.directions) {
        Eigen::Vector3d r(v[0], v[1], v[2]);
        h += r * r.transpose();
    }
    h /= static_cast<double>(params.directions.size());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(h, Eigen::EigenvaluesOnly);
    double largest = solver.eigenvalues().maxCoeff();
    if (!(largest > 0.0) || solver.eigenvalues().minCoeff() <= tol::kIcRelative * largest) {
        fail(ErrorKind::SingularH, "direction second-moment matrix is singular");
    }
    return (9.0 + solver.eigenvalues().cwiseInverse().sum()) / 12.0;
}

double max_projection_norm_grid(const Povm &povm, int resolution) {
    require(povm.dim() == 2, ErrorKind::Dimension, "projection grid applies to qubits");
    resolution = std::max(resolution, 8);
    QubitNormSweep sweep(povm);
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    double best = 0.0;
    // Union of Fibonacci lattices at every resolution from 8 up: coarser
    // grids are subsets of the sweep, which makes the maximum monotone in
    // the resolution.
    for (int r = 8; r <= resolution; ++r) {
        long points = static_cast<long>(r) * r;
        for (long i = 0; i < points; ++i) {
            double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(points);
            double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
            double theta = golden_angle * static_cast<double>(i);
            std::array<double, 3> n{radius * std::cos(theta), radius * std::sin(theta), z};
            best = std::max(best, sweep.squared_norm_at(n));
        }
    }
    return best;
}

}  // namespace sht
