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

#include "core/shadows.hpp"

#include <cmath>

#include "core/tolerances.hpp"

namespace sht {

FrameSuperoperator::FrameSuperoperator(OperatorBasis basis, Eigen::MatrixXd matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix_);
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

FrameSuperoperator FrameSuperoperator::from_povm(const Povm &povm) {
    OperatorBasis basis = OperatorBasis::standard(povm.dim());
    Eigen::MatrixXd matrix = frame_matrix(povm, basis);
    return FrameSuperoperator(std::move(basis), std::move(matrix));
}

bool FrameSuperoperator::invertible() const {
    double largest = eigenvalues_.maxCoeff();
    return largest > 0.0 && eigenvalues_.minCoeff() > tol::kIcRelative * largest;
}

HermitianOperator FrameSuperoperator::apply(const HermitianOperator &op) const {
    return basis_.devectorize(matrix_ * basis_.vectorize(op));
}

HermitianOperator FrameSuperoperator::apply_inverse(const HermitianOperator &op) const {
    require(invertible(), ErrorKind::NotInformationallyComplete,
            "frame is singular; measurement is not informationally complete");
    Eigen::VectorXd coords = eigenvectors_.transpose() * basis_.vectorize(op);
    coords.array() /= eigenvalues_.array();
    return basis_.devectorize(eigenvectors_ * coords);
}

std::shared_ptr<const ClassicalShadowSet> classical_shadows(const Povm &povm) {
    if (auto cached = povm.cached_shadows()) {
        return cached;
    }
    FrameSuperoperator frame = FrameSuperoperator::from_povm(povm);
    require(frame.invertible(), ErrorKind::NotInformationallyComplete,
            "frame is singular; measurement is not informationally complete");
    std::vector<HermitianOperator> shadows;
    shadows.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        shadows.push_back(frame.apply_inverse(effect));
    }
    auto set = std::make_shared<const ClassicalShadowSet>(povm, std::move(shadows));
    return povm.store_shadows(std::move(set));
}

std::shared_ptr<const ClassicalShadowSet> classical_shadows_symmetric(const Povm &povm) {
    SymmetryCoefficients coeffs = symmetry_coefficients(povm);
    HermitianOperator id = HermitianOperator::identity(povm.dim());
    std::vector<HermitianOperator> closed_form;
    closed_form.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        closed_form.push_back(effect * coeffs.a + id * coeffs.b);
    }

    // Uniform trace moments do not imply rigid symmetry; gate the closed form
    // on agreement with direct inversion.
    auto general = classical_shadows(povm);
    for (std::size_t k = 0; k < povm.size(); ++k) {
        double diff = max_abs_diff(closed_form[k], general->shadow(k));
        if (diff > tol::kSymmetricCrossCheck) {
            fail(ErrorKind::NotRigidlySymmetric,
                 "closed form deviates from direct inversion by " + std::to_string(diff) +
                     " at effect " + std::to_string(k));
        }
    }
    return std::make_shared<const ClassicalShadowSet>(
        povm, std::move(closed_form), std::make_pair(coeffs.a, coeffs.b));
}

HermitianOperator least_squares_estimate(const Povm &povm,
                                         std::span<const double> distribution) {
    require(distribution.size() == povm.size(), ErrorKind::Dimension,
            "distribution length does not match outcome count");
    for (double p : distribution) {
        require(std::isfinite(p), ErrorKind::Range, "distribution entries must be finite");
    }
    auto shadows = classical_shadows(povm);
    Matrix acc = Matrix::Zero(povm.dim(), povm.dim());
    for (std::size_t k = 0; k < povm.size(); ++k) {
        acc += distribution[k] * shadows->shadow(k).matrix();
    }
    return hermitian_unchecked(std::move(acc));
}

BlochLeastSquares bloch_least_squares(const Povm &povm) {
    require(povm.dim() == 2, ErrorKind::Dimension, "Bloch estimator requires a qubit measurement");
    QubitPovmParams params = qubit_params(povm);
    std::size_t n = params.weights.size();
    double expected = 2.0 / static_cast<double>(n);
    for (double w : params.weights) {
        require(std::abs(w - expected) <= tol::kUniformity, ErrorKind::NotUniform,
                "Bloch estimator requires uniform weights 2/N");
    }

    BlochLeastSquares result;
    for (const auto &v : params.directions) {
        Eigen::Vector3d r(v[0], v[1], v[2]);
        result.h += r * r.transpose();
    }
    result.h /= static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(result.h);
    double largest = solver.eigenvalues().maxCoeff();
    if (!(largest > 0.0) || solver.eigenvalues().minCoeff() <= tol::kIcRelative * largest) {
        fail(ErrorKind::SingularH, "direction second-moment matrix is singular");
    }
    Eigen::Matrix3d h_inv = solver.eigenvectors() *
                            solver.eigenvalues().cwiseInverse().asDiagonal() *
                            solver.eigenvectors().transpose();

    result.shadow_columns.reserve(n);
    for (const auto &v : params.directions) {
        Eigen::Vector3d s = h_inv * Eigen::Vector3d(v[0], v[1], v[2]);
        result.shadow_columns.push_back(BlochVector{1.0, {s(0), s(1), s(2)}});
    }
    return result;
}

std::shared_ptr<const ClassicalShadowSet> classical_shadows_bloch(const Povm &povm) {
    BlochLeastSquares bls = bloch_least_squares(povm);
    std::vector<HermitianOperator> shadows;
    shadows.reserve(bls.shadow_columns.size());
    for (const auto &column : bls.shadow_columns) {
        shadows.push_back(from_bloch(column));
    }
    return std::make_shared<const ClassicalShadowSet>(povm, std::move(shadows));
}

}  // namespace sht
