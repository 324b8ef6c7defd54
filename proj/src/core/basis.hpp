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

#include <vector>

#include "core/operators.hpp"

namespace sht {

/// Orthonormal basis of the real vector space of D x D Hermitian matrices:
/// D^2 elements with tr(B_i B_j) = delta_ij. Powers of two get normalized
/// Pauli strings; other dimensions get generalized Gell-Mann matrices. Both
/// are closed-form, so orthonormality holds to machine precision without any
/// Gram-Schmidt pass.
class OperatorBasis {
   public:
    static OperatorBasis standard(int dim);

    int dim() const { return dim_; }
    const std::vector<HermitianOperator> &elements() const { return elements_; }

    /// Coordinates x_i = tr(X B_i).
    Eigen::VectorXd vectorize(const HermitianOperator &op) const;
    HermitianOperator devectorize(const Eigen::VectorXd &coords) const;

   private:
    OperatorBasis(int dim, std::vector<HermitianOperator> elements)
        : dim_(dim), elements_(std::move(elements)) {}

    int dim_;
    std::vector<HermitianOperator> elements_;
};

}  // namespace sht
