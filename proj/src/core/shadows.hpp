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

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/povm.hpp"

namespace sht {

/// The self-adjoint map X -> sum_k tr(X E_k) E_k, stored as a real symmetric
/// matrix over an orthonormal operator basis. Positive semidefinite, and
/// strictly positive exactly when the measurement is informationally
/// complete. Inversion is by eigendecomposition and fails hard when the
/// smallest eigenvalue drops below 1e-10 of the largest; there is no silent
/// pseudo-inverse, since a regularized inverse would quietly corrupt every
/// norm built on top of it.
class FrameSuperoperator {
   public:
    static FrameSuperoperator from_povm(const Povm &povm);

    int dim() const { return basis_.dim(); }
    const OperatorBasis &basis() const { return basis_; }
    const Eigen::MatrixXd &matrix() const { return matrix_; }

    HermitianOperator apply(const HermitianOperator &op) const;
    /// Throws NotInformationallyCompleteError when the frame is singular.
    HermitianOperator apply_inverse(const HermitianOperator &op) const;

    double min_eigenvalue() const { return eigenvalues_.minCoeff(); }
    double max_eigenvalue() const { return eigenvalues_.maxCoeff(); }
    bool invertible() const;

   private:
    FrameSuperoperator(OperatorBasis basis, Eigen::MatrixXd matrix);

    OperatorBasis basis_;
    Eigen::MatrixXd matrix_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

/// The per-outcome least-square state estimates rho_k, i.e. the inverse
/// frame applied to each effect. Averaging them over measurement data
/// reconstructs the state.
class ClassicalShadowSet {
   public:
    ClassicalShadowSet(Povm povm, std::vector<HermitianOperator> shadows,
                       std::optional<std::pair<double, double>> symmetric_ab = std::nullopt)
        : povm_(std::move(povm)), shadows_(std::move(shadows)), symmetric_ab_(symmetric_ab) {}

    const Povm &povm() const { return povm_; }
    std::size_t size() const { return shadows_.size(); }
    const HermitianOperator &shadow(std::size_t k) const { return shadows_.at(k); }
    const std::vector<HermitianOperator> &shadows() const { return shadows_; }

    /// (a, b) when the set was produced by the symmetric closed form.
    std::optional<std::pair<double, double>> symmetric_ab() const { return symmetric_ab_; }

   private:
    Povm povm_;
    std::vector<HermitianOperator> shadows_;
    std::optional<std::pair<double, double>> symmetric_ab_;
};

/// General path: direct frame inversion. The result is cached on the
/// measurement, so repeated norm and estimation calls pay for the
/// decomposition once.
std::shared_ptr<const ClassicalShadowSet> classical_shadows(const Povm &povm);

/// Symmetric fast path: a E_k + b 1 with coefficients from the trace
/// moments. Uniform moments alone do not certify rigid symmetry, so the
/// closed form is verified against the directly inverted shadows and a
/// mismatch raises NotRigidlySymmetricError instead of returning silently.
std::shared_ptr<const ClassicalShadowSet> classical_shadows_symmetric(const Povm &povm);

/// Least-square estimate for a distribution over outcomes. Linear in the
/// distribution; reproduces the state exactly on exact statistics.
HermitianOperator least_squares_estimate(const Povm &povm, std::span<const double> distribution);

/// Second-moment matrix of the Bloch directions and the shadow columns
/// (1, H^{-1} r_k) of the qubit least-squares estimator.
struct BlochLeastSquares {
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    std::vector<BlochVector> shadow_columns;
};

/// Closed-form qubit estimator for uniform-weight measurements with effects
/// (2/N)(1 + r_k . sigma)/2. Throws SingularHError when H is not invertible
/// (equivalently, the measurement is not informationally complete).
BlochLeastSquares bloch_least_squares(const Povm &povm);

/// Shadow set assembled from the Bloch-representation formula; agrees with
/// the general path on its domain.
std::shared_ptr<const ClassicalShadowSet> classical_shadows_bloch(const Povm &povm);

}  // namespace sht
